"""K_0 of F[C3] and the finiteness obstruction for complexes with 4-dimensional homology.

Over F2 the simple modules are the trivial module and the 2-dimensional V, so
K_0 = Z[V]/(V^2 - V - 2).  Over GF(4) there are three characters 1, alpha,
alpha^2 and K_0 = Z[alpha]/(alpha^3 - 1).
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError, InvariantViolation
from .exactfield import F2, Field, Matrix, Quotient, Subspace
from .perfcx import GradedQRep, PerfectComplex, decompose_qrep, homology
from .bgg import classify
from .polys import GradedIdeal, even_invariant_cogenerator, even_invariant_parameter, invariant_even_parameter_exists
from .skewalg import GroupTag, conj_q, group_algebra_mul


@dataclass(frozen=True)
class K0F2:
    """a + b[V]."""

    a: int = 0
    b: int = 0

    def __add__(self, o: "K0F2") -> "K0F2":
        _same(self, o)
        return K0F2(self.a + o.a, self.b + o.b)

    def __sub__(self, o: "K0F2") -> "K0F2":
        _same(self, o)
        return K0F2(self.a - o.a, self.b - o.b)

    def __neg__(self) -> "K0F2":
        return K0F2(-self.a, -self.b)

    def __mul__(self, o: "K0F2") -> "K0F2":
        _same(self, o)
        # V^2 = V + 2
        return K0F2(self.a * o.a + 2 * self.b * o.b, self.a * o.b + self.b * o.a + self.b * o.b)

    def scale(self, k: int) -> "K0F2":
        return K0F2(k * self.a, k * self.b)

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def as_list(self) -> list[int]:
        return [self.a, self.b]

    def __str__(self) -> str:
        return _fmt([(self.a, ""), (self.b, "V")])


@dataclass(frozen=True)
class K0F4:
    """a + b[alpha] + c[alpha^2]."""

    a: int = 0
    b: int = 0
    c: int = 0

    def _v(self) -> tuple[int, int, int]:
        return (self.a, self.b, self.c)

    def __add__(self, o: "K0F4") -> "K0F4":
        _same(self, o)
        return K0F4(*(x + y for x, y in zip(self._v(), o._v())))

    def __sub__(self, o: "K0F4") -> "K0F4":
        _same(self, o)
        return K0F4(*(x - y for x, y in zip(self._v(), o._v())))

    def __neg__(self) -> "K0F4":
        return K0F4(-self.a, -self.b, -self.c)

    def __mul__(self, o: "K0F4") -> "K0F4":
        _same(self, o)
        out = [0, 0, 0]
        for i, x in enumerate(self._v()):
            for j, y in enumerate(o._v()):
                out[(i + j) % 3] += x * y
        return K0F4(*out)

    def scale(self, k: int) -> "K0F4":
        return K0F4(k * self.a, k * self.b, k * self.c)

    def is_zero(self) -> bool:
        return self._v() == (0, 0, 0)

    def as_list(self) -> list[int]:
        return list(self._v())

    def __str__(self) -> str:
        return _fmt([(self.a, ""), (self.b, "a"), (self.c, "a^2")])


K0Elem = K0F2 | K0F4


def _same(x, y) -> None:
    if type(x) is not type(y):
        raise DomainError(f"K0 elements from different rings: {type(x).__name__} and {type(y).__name__}")


def _fmt(terms: list[tuple[int, str]]) -> str:
    out = ""
    for k, sym in terms:
        if k == 0:
            continue
        mag = abs(k)
        body = str(mag) if not sym else (sym if mag == 1 else f"{mag}{sym}")
        if not out:
            out = ("-" if k < 0 else "") + body
        else:
            out += (" - " if k < 0 else " + ") + body
    return out or "0"


def k0_zero(field: Field) -> K0Elem:
    return K0F2() if field is F2 else K0F4()


def k0_one(field: Field) -> K0Elem:
    return K0F2(1, 0) if field is F2 else K0F4(1, 0, 0)


def k0_mul(x: K0Elem, y: K0Elem) -> K0Elem:
    return x * y


def from_multiplicities(field: Field, mult: tuple[int, ...]) -> K0Elem:
    return K0F2(*mult) if field is F2 else K0F4(*mult)


def class_of(field: Field, q: Matrix) -> K0Elem:
    if q.nrows == 0:
        return k0_zero(field)
    return from_multiplicities(field, decompose_qrep(field, q))


def base_change(x: K0F2) -> K0F4:
    """Extension of scalars F2 -> GF(4): V splits as alpha + alpha^2."""
    return K0F4(x.a, x.b, x.b)


def euler_char(H: GradedQRep) -> K0Elem:
    out = k0_zero(H.field)
    for deg, piece in H.pieces.items():
        if piece.dim:
            c = class_of(H.field, piece.q)
            out = out + c if deg % 2 == 0 else out - c
    return out


GR_FP_CLASS = {"F2": K0F2(2, 1), "F4": K0F4(2, 1, 1)}


def gr_fp_class(field: Field) -> K0Elem:
    """Class of the associated graded of F[P] under conjugation by C3."""
    return GR_FP_CLASS[field.name]


def gr_fp_class_oracle(field: Field) -> K0Elem:
    """The same class computed from powers of the augmentation ideal of F[P]."""
    f = field

    def vec(u):
        return f.vfrom(u)

    aug_ideal = [(1, 1, 0, 0), (1, 0, 1, 0), (1, 0, 0, 1)]  # e+f1, e+f2, e+f1f2
    powers = [Subspace.full(f, 4), Subspace(f, 4, [vec(u) for u in aug_ideal])]
    current = aug_ideal
    for _ in range(2):
        nxt = [group_algebra_mul(f, u, v) for u in current for v in aug_ideal]
        powers.append(Subspace(f, 4, [vec(u) for u in nxt]))
        current = nxt
    conj = Matrix.from_columns(f, 4, [vec(conj_q(tuple(1 if i == g else 0 for i in range(4)))) for g in range(4)])
    out = k0_zero(f)
    for s in range(3):
        Q = Quotient(powers[s], powers[s + 1])
        out = out + class_of(f, Q.induced(conj))
    return out


def pr_euler(C: PerfectComplex) -> K0Elem:
    """Alternating sum of the classes of C^i / C^i I."""
    _need_c3(C)
    out = k0_zero(C.field)
    for i in C.degrees():
        M = C.term(i)
        Q = Quotient(Subspace.full(C.field, M.dim), M.augmentation_image())
        c = class_of(C.field, Q.induced(M.act_q))
        out = out + c if i % 2 == 0 else out - c
    return out


def _need_c3(C: PerfectComplex) -> None:
    if C.group is not GroupTag.C3:
        raise DomainError("K0 computations need the group C3")


def _need_four(H: GradedQRep) -> None:
    if H.total_dim() != 4:
        raise DomainError(f"homology not 4-dimensional (dimension {H.total_dim()})")


def obstruction_vanishes(C: PerfectComplex) -> bool:
    _need_c3(C)
    H = homology(C)
    _need_four(H)
    return euler_char(H).is_zero()


def finite_free_criterion(J: GradedIdeal) -> bool:
    return invariant_even_parameter_exists(J)


def f2_homology_criterion(C: PerfectComplex, mn: tuple[int, int] | None = None) -> bool:
    """m or n odd, and every homology group a trivial C3-representation (F2 only)."""
    if C.field is not F2:
        raise DomainError("the homology criterion is stated over F2")
    _need_c3(C)
    H = homology(C)
    _need_four(H)
    if mn is None:
        r = classify(C)
        mn = (r.m, r.n)
    m, n = mn
    trivial = all(decompose_qrep(F2, H.q_matrix(d))[1] == 0 for d in H.support())
    return (m % 2 == 1 or n % 2 == 1) and trivial


@dataclass
class ObstructionReport:
    chi: K0Elem
    pr_chi: K0Elem
    gr_class: K0Elem
    vanishes: bool
    criterion_iii: bool
    criterion_iv: bool
    f2_corollary: bool | None
    identity_holds: bool

    def to_json(self) -> dict:
        return {
            "chi": str(self.chi),
            "pr_chi": str(self.pr_chi),
            "gr_class": str(self.gr_class),
            "vanishes": self.vanishes,
            "criterion_iii": self.criterion_iii,
            "criterion_iv": self.criterion_iv,
            "f2_corollary": self.f2_corollary,
        }

    @property
    def consistent(self) -> bool:
        vals = {self.vanishes, self.criterion_iii, self.criterion_iv}
        if self.f2_corollary is not None:
            vals.add(self.f2_corollary)
        return len(vals) == 1 and self.identity_holds


def obstruction_report(C: PerfectComplex, strict: bool = True) -> ObstructionReport:
    """Euler characteristics and all finiteness criteria; inconsistency is an invariant violation."""
    _need_c3(C)
    H = homology(C)
    _need_four(H)
    res = classify(C)
    J = res.triple.J
    chi = euler_char(H)
    pr = pr_euler(C)
    gr = gr_fp_class(C.field)
    rep = ObstructionReport(
        chi=chi,
        pr_chi=pr,
        gr_class=gr,
        vanishes=chi.is_zero(),
        criterion_iii=even_invariant_cogenerator(J),
        criterion_iv=even_invariant_parameter(J),
        f2_corollary=f2_homology_criterion(C, (res.m, res.n)) if C.field is F2 else None,
        identity_holds=pr * gr == chi,
    )
    if strict and not rep.consistent:
        raise InvariantViolation(f"finiteness criteria disagree: {rep.to_json()}")
    return rep


__all__ = [
    "K0F2",
    "K0F4",
    "K0Elem",
    "k0_mul",
    "k0_zero",
    "k0_one",
    "base_change",
    "class_of",
    "euler_char",
    "gr_fp_class",
    "gr_fp_class_oracle",
    "pr_euler",
    "obstruction_vanishes",
    "finite_free_criterion",
    "f2_homology_criterion",
    "obstruction_report",
    "ObstructionReport",
]

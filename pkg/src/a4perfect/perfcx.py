"""Right modules over the skew group algebra and bounded cochain complexes of them.

A module is an F-vector space with three matrices giving right multiplication
by ``y1``, ``y2`` and ``q``.  Matrices act on column vectors, so the matrix of
``x -> x*a*b`` is ``act_b @ act_a``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field as dc_field

from .exactfield import (
    F2,
    F4,
    W,
    W2,
    Field,
    Matrix,
    MatrixBuilder,
    Quotient,
    Subspace,
    block_diag,
    kernel,
    kron,
)
from .skewalg import ExtElem, GroupTag, psi_matrix, right_mult_matrix


@dataclass(frozen=True)
class ModuleRep:
    field: Field
    group: GroupTag
    dim: int
    act_y1: Matrix
    act_y2: Matrix
    act_q: Matrix

    def violations(self) -> list[str]:
        """Broken module axioms, as messages (empty when the module is fine)."""
        out = []
        n = self.dim
        for name in ("act_y1", "act_y2", "act_q"):
            m = getattr(self, name)
            if m.shape != (n, n) or m.field is not self.field:
                return [f"{name} has shape {m.shape}, expected {(n, n)}"]
        y1, y2, q = self.act_y1, self.act_y2, self.act_q
        if not (y1 @ y1).is_zero():
            out.append("y1^2 != 0")
        if not (y2 @ y2).is_zero():
            out.append("y2^2 != 0")
        if y1 @ y2 != y2 @ y1:
            out.append("y1 and y2 do not commute")
        if self.group is GroupTag.TRIVIAL:
            if not q.is_identity():
                out.append("q must act trivially for the trivial group")
        else:
            if not (q @ q @ q).is_identity():
                out.append("q^3 != 1")
            if q @ y2 != y1 @ q:
                out.append("skew relation q*y1 = y2*q fails")
            if q @ (y1 + y2) != y2 @ q:
                out.append("skew relation q*y2 = (y1+y2)*q fails")
        return out

    def restrict(self) -> "ModuleRep":
        """Forget the q-action."""
        return ModuleRep(
            self.field, GroupTag.TRIVIAL, self.dim, self.act_y1, self.act_y2, Matrix.identity(self.field, self.dim)
        )

    @property
    def act_y12(self) -> Matrix:
        return self.act_y2 @ self.act_y1

    def augmentation_image(self) -> Subspace:
        """``M*I``, the span of the images of y1 and y2."""
        return Subspace(self.field, self.dim, self.act_y1.columns() + self.act_y2.columns())


def zero_module(field: Field = F2, group: GroupTag = GroupTag.C3) -> ModuleRep:
    z = Matrix.zeros(field, 0, 0)
    return ModuleRep(field, group, 0, z, z, z)


def induced_module(field: Field, group: GroupTag, q_rep: Matrix) -> ModuleRep:
    """``Lambda (x) W`` for a right F[Q]-module W given by the matrix of q.

    Basis index ``4*w + k``.  The element ``q`` acts by ``psi(q^-1) (x) q_W``.
    """
    k = q_rep.nrows
    ident = Matrix.identity(field, k)
    y1 = kron(ident, right_mult_matrix(ExtElem.y1(field)))
    y2 = kron(ident, right_mult_matrix(ExtElem.y2(field)))
    if group is GroupTag.TRIVIAL:
        if not q_rep.is_identity():
            raise ValueError("trivial group needs the identity q-matrix")
        q = Matrix.identity(field, 4 * k)
    else:
        q = kron(q_rep, psi_matrix(field, 2))
    return ModuleRep(field, group, 4 * k, y1, y2, q)


def lambda_module(field: Field = F2, group: GroupTag = GroupTag.C3) -> ModuleRep:
    """The exterior algebra itself, with q acting through psi(q^-1)."""
    return induced_module(field, group, Matrix.identity(field, 1))


V_MATRIX = Matrix.from_lists(F2, [[0, 1], [1, 1]])


def irreducible_qreps(field: Field, group: GroupTag = GroupTag.C3) -> dict[str, Matrix]:
    """The simple F[Q]-modules as q-matrices, keyed by label."""
    if group is GroupTag.TRIVIAL:
        return {"triv": Matrix.identity(field, 1)}
    if field is F2:
        return {"triv": Matrix.identity(F2, 1), "V": V_MATRIX}
    return {
        "triv": Matrix.identity(F4, 1),
        "alpha": Matrix.from_lists(F4, [[W]]),
        "alpha2": Matrix.from_lists(F4, [[W2]]),
    }


def indecomposable_projectives(field: Field, group: GroupTag = GroupTag.C3) -> dict[str, ModuleRep]:
    return {k: induced_module(field, group, m) for k, m in irreducible_qreps(field, group).items()}


def free_module(field: Field = F2, group: GroupTag = GroupTag.C3, rank: int = 1) -> ModuleRep:
    """The free module of the given rank over the skew group algebra."""
    n = group.order
    cyc = Matrix.from_columns(field, n, [field.vunit((i + 1) % n) for i in range(n)])
    regular = block_diag([cyc] * rank, field) if rank else Matrix.zeros(field, 0, 0)
    return induced_module(field, group, regular)


def direct_sum(mods: list[ModuleRep], field: Field = F2, group: GroupTag = GroupTag.C3) -> ModuleRep:
    if not mods:
        return zero_module(field, group)
    f, g = mods[0].field, mods[0].group
    return ModuleRep(
        f,
        g,
        sum(m.dim for m in mods),
        block_diag([m.act_y1 for m in mods], f),
        block_diag([m.act_y2 for m in mods], f),
        block_diag([m.act_q for m in mods], f),
    )


@dataclass(frozen=True)
class FreenessCertificate:
    free: bool
    rank: int
    generators: tuple  # lifts of a basis of M / M*I


def is_lambda_free(M: ModuleRep) -> FreenessCertificate:
    """Decide whether M is free over the exterior algebra.

    The exterior algebra is local, so M is free iff ``dim M = 4 * dim(M / M*I)``.
    """
    top = Quotient(Subspace.full(M.field, M.dim), M.augmentation_image())
    g = top.dim
    return FreenessCertificate(M.dim == 4 * g, g, tuple(top.reps))


# ---------------------------------------------------------------------------
# complexes


@dataclass(frozen=True)
class PerfectComplex:
    """Cochain complex with terms in degrees ``lo .. lo+len(terms)-1``.

    ``diffs[i]`` maps ``terms[i]`` to ``terms[i+1]``.
    """

    field: Field
    group: GroupTag
    lo: int
    terms: tuple[ModuleRep, ...]
    diffs: tuple[Matrix, ...] = dc_field(default=())

    @property
    def hi(self) -> int:
        return self.lo + len(self.terms) - 1

    def degrees(self) -> range:
        return range(self.lo, self.hi + 1)

    def term(self, i: int) -> ModuleRep:
        if self.lo <= i <= self.hi:
            return self.terms[i - self.lo]
        return zero_module(self.field, self.group)

    def dim(self, i: int) -> int:
        return self.term(i).dim

    def diff(self, i: int) -> Matrix:
        """``d^i : C^i -> C^(i+1)``."""
        if self.lo <= i < self.hi:
            return self.diffs[i - self.lo]
        return Matrix.zeros(self.field, self.dim(i + 1), self.dim(i))

    def total_dim(self) -> int:
        return sum(t.dim for t in self.terms)

    def restrict(self) -> "PerfectComplex":
        return PerfectComplex(self.field, GroupTag.TRIVIAL, self.lo, tuple(t.restrict() for t in self.terms), self.diffs)


def zero_complex(field: Field = F2, group: GroupTag = GroupTag.C3) -> PerfectComplex:
    return PerfectComplex(field, group, 0, ())


def concentrated(M: ModuleRep, degree: int = 0) -> PerfectComplex:
    return PerfectComplex(M.field, M.group, degree, (M,))


def make_complex(lo: int, terms: list[ModuleRep], diffs: list[Matrix]) -> PerfectComplex:
    if not terms:
        raise ValueError("use zero_complex for the empty complex")
    if len(diffs) != len(terms) - 1:
        raise ValueError(f"expected {len(terms) - 1} differentials, got {len(diffs)}")
    return PerfectComplex(terms[0].field, terms[0].group, lo, tuple(terms), tuple(diffs))


@dataclass
class ValidationReport:
    violations: list[tuple[int, str]]

    @property
    def ok(self) -> bool:
        return not self.violations

    def first(self) -> str | None:
        if not self.violations:
            return None
        deg, msg = self.violations[0]
        return f"{msg} at degree {deg}"

    def __bool__(self) -> bool:
        return self.ok


def validate(C: PerfectComplex) -> ValidationReport:
    out: list[tuple[int, str]] = []
    for i in C.degrees():
        M = C.term(i)
        if M.field is not C.field or M.group is not C.group:
            out.append((i, "term has the wrong field or group"))
            continue
        out.extend((i, msg) for msg in M.violations())
        cert = is_lambda_free(M)
        if not cert.free:
            out.append((i, f"term of dimension {M.dim} is not Lambda-free"))
    if out:
        return ValidationReport(out)
    for i in range(C.lo, C.hi):
        d = C.diff(i)
        src, dst = C.term(i), C.term(i + 1)
        if d.shape != (dst.dim, src.dim):
            out.append((i, f"d has shape {d.shape}, expected {(dst.dim, src.dim)}"))
            continue
        for name in ("act_y1", "act_y2", "act_q"):
            if d @ getattr(src, name) != getattr(dst, name) @ d:
                out.append((i, f"d does not commute with {name}"))
    if out:
        return ValidationReport(out)
    for i in range(C.lo, C.hi - 1):
        if not (C.diff(i + 1) @ C.diff(i)).is_zero():
            out.append((i, "d² ≠ 0"))
    return ValidationReport(out)


# ---------------------------------------------------------------------------
# homology


@dataclass(frozen=True)
class HomologyPiece:
    degree: int
    quotient: Quotient
    q: Matrix

    @property
    def dim(self) -> int:
        return self.quotient.dim


@dataclass
class GradedQRep:
    field: Field
    pieces: dict[int, HomologyPiece]

    def dims(self) -> dict[int, int]:
        return {d: p.dim for d, p in sorted(self.pieces.items()) if p.dim}

    def total_dim(self) -> int:
        return sum(p.dim for p in self.pieces.values())

    def support(self) -> list[int]:
        return [d for d, p in sorted(self.pieces.items()) if p.dim]

    def q_matrix(self, degree: int) -> Matrix:
        p = self.pieces.get(degree)
        return p.q if p else Matrix.zeros(self.field, 0, 0)


def cycles(C: PerfectComplex, i: int) -> Subspace:
    return kernel(C.diff(i))


def boundaries(C: PerfectComplex, i: int) -> Subspace:
    return C.diff(i - 1).image()


def homology(C: PerfectComplex) -> GradedQRep:
    pieces = {}
    for i in C.degrees():
        Q = Quotient(cycles(C, i), boundaries(C, i))
        pieces[i] = HomologyPiece(i, Q, Q.induced(C.term(i).act_q))
    return GradedQRep(C.field, pieces)


def decompose_qrep(field: Field, q: Matrix) -> tuple[int, ...]:
    """Multiplicities of the simple F[C3]-modules in a representation.

    F2: ``(trivial, V)``.  F4: ``(1, alpha, alpha^2)`` where alpha is the
    eigenvalue ``w``.
    """
    n = q.nrows
    if not (q @ q @ q).is_identity():
        raise ValueError("q-matrix does not cube to the identity")
    ident = Matrix.identity(field, n)
    fixed = n - (q + ident).rank()
    if field is F2:
        if (n - fixed) % 2:
            raise ValueError("inconsistent dimensions in C3-representation")
        return (fixed, (n - fixed) // 2)
    a = n - (q + ident.scale(W)).rank()
    b = n - (q + ident.scale(W2)).rank()
    if fixed + a + b != n:
        raise ValueError("q-matrix is not diagonalizable")
    return (fixed, a, b)


def shift(C: PerfectComplex, k: int) -> PerfectComplex:
    return PerfectComplex(C.field, C.group, C.lo + k, C.terms, C.diffs)


# ---------------------------------------------------------------------------
# module maps and random complexes


def hom_space(M: ModuleRep, N: ModuleRep, vanish_on: Matrix | None = None) -> list[Matrix]:
    """Basis of the module maps ``M -> N``, optionally killing ``vanish_on``.

    ``vanish_on`` is a matrix with target M; the returned maps X satisfy
    ``X @ vanish_on = 0``.
    """
    f = M.field
    m, n = M.dim, N.dim
    nvar = n * m
    pairs = [(M.act_y1, N.act_y1), (M.act_y2, N.act_y2)]
    if M.group is not GroupTag.TRIVIAL:
        pairs.append((M.act_q, N.act_q))
    extra = vanish_on.ncols if vanish_on is not None else 0
    B = MatrixBuilder(f, len(pairs) * n * m + n * extra, nvar)
    row = 0
    for A, Bn in pairs:
        Al, Bl = A.to_lists(), Bn.to_lists()
        # (X A - B X)[i][k]
        for i in range(n):
            for k in range(m):
                for j in range(m):
                    if Al[j][k]:
                        B.add(row, i * m + j, Al[j][k])
                for j in range(n):
                    if Bl[i][j]:
                        B.add(row, j * m + k, Bl[i][j])
                row += 1
    if vanish_on is not None:
        P = vanish_on.to_lists()
        for i in range(n):
            for k in range(extra):
                for j in range(m):
                    if P[j][k]:
                        B.add(row, i * m + j, P[j][k])
                row += 1
    K = kernel(B.build())
    out = []
    for v in K.basis:
        entries = f.vto(v, nvar)
        out.append(Matrix.from_lists(f, [entries[i * m : (i + 1) * m] for i in range(n)], m))
    return out


def random_combination(field: Field, basis: list[Matrix], rng: random.Random, shape: tuple[int, int]) -> Matrix:
    out = Matrix.zeros(field, *shape)
    for b in basis:
        c = rng.choice(field.elements)
        if c:
            out = out + b.scale(c)
    return out


def random_projective(field: Field, group: GroupTag, rng: random.Random, max_summands: int = 2) -> ModuleRep:
    blocks = list(indecomposable_projectives(field, group).values())
    k = rng.randint(1, max_summands)
    return direct_sum([rng.choice(blocks) for _ in range(k)])


def random_complex(
    field: Field = F2,
    group: GroupTag = GroupTag.C3,
    rng: random.Random | None = None,
    length: int = 3,
    max_summands: int = 2,
    lo: int | None = None,
) -> PerfectComplex:
    """A random valid complex; each differential is a uniform random module map killing the previous one."""
    rng = rng or random.Random()
    if lo is None:
        lo = rng.randint(-2, 2)
    terms = [random_projective(field, group, rng, max_summands) for _ in range(length)]
    diffs = []
    prev = None
    for i in range(length - 1):
        basis = hom_space(terms[i], terms[i + 1], prev)
        d = random_combination(field, basis, rng, (terms[i + 1].dim, terms[i].dim))
        diffs.append(d)
        prev = d
    return make_complex(lo, terms, diffs)


__all__ = [
    "ModuleRep",
    "PerfectComplex",
    "GradedQRep",
    "HomologyPiece",
    "ValidationReport",
    "FreenessCertificate",
    "zero_module",
    "zero_complex",
    "induced_module",
    "lambda_module",
    "free_module",
    "direct_sum",
    "irreducible_qreps",
    "indecomposable_projectives",
    "concentrated",
    "make_complex",
    "is_lambda_free",
    "validate",
    "homology",
    "cycles",
    "boundaries",
    "decompose_qrep",
    "shift",
    "V_MATRIX",
    "hom_space",
    "random_complex",
    "random_projective",
]

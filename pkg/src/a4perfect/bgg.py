"""The equivariant BGG correspondence between perfect complexes and dg S-modules.

A dg S-module here is S-free on finitely many generators ``g_a`` of internal
degree ``deg_a``; the element ``g_a * s`` with ``s`` in S_e sits in degree
``deg_a + e``.  The differential is ``D(g_a) = sum_b g_b * D_ba`` with
``D_ba`` a homogeneous polynomial, stored as one generator matrix per
monomial.  The group acts by ``(g_a * s) q = (g_a q) * (q^-1 . s)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .errors import DomainError, HomologyBoundError, InvariantViolation
from .exactfield import F2, W, W2, Field, Matrix, MatrixBuilder, Quotient, Subspace, block_diag, kernel
from .perfcx import (
    GradedQRep,
    ModuleRep,
    PerfectComplex,
    decompose_qrep,
    homology,
    is_lambda_free,
    make_complex,
    shift,
    validate,
)
from .polys import (
    GradedIdeal,
    cogenerators,
    is_invariant_ideal,
    is_parameter_ideal,
    q_matrix,
    q_matrix_f2,
)
from .skewalg import ExtElem, GroupTag, psi_matrix, right_mult_matrix

LABELS = ("triv", "alpha", "alpha2")
_LABEL_SCALAR = {"triv": 1, "alpha": W, "alpha2": W2}
_SCALAR_LABEL = {1: "triv", W: "alpha", W2: "alpha2"}


def label_scalar(label: str, field: Field) -> int:
    """Eigenvalue of q on the one-dimensional representation ``label``.

    ``alpha`` is the eigenvalue ``w`` (a fixed root of X^2 + X + 1 in GF(4)).
    """
    if label not in _LABEL_SCALAR:
        raise DomainError(f"unknown representation label {label!r}")
    if field is F2 and label != "triv":
        raise DomainError("over F2 the only one-dimensional representation is triv")
    return _LABEL_SCALAR[label]


def scalar_label(s: int) -> str:
    return _SCALAR_LABEL[s]


# ---------------------------------------------------------------------------
# dg S-modules


@dataclass
class DgSModule:
    field: Field
    group: GroupTag
    degrees: tuple[int, ...]
    diff: dict[tuple[int, int], Matrix]  # monomial (i, j) = x1^i x2^j -> matrix indexed [b, a]
    qgen: Matrix  # action of q on generators, column a = g_a q

    def __post_init__(self):
        f = self.field
        terms: list[list] = [[] for _ in self.degrees]
        for (i, j), K in self.diff.items():
            for b, row in enumerate(K.rows):
                for a in range(K.ncols):
                    c = f.vget(row, a)
                    if c:
                        if self.degrees[b] + i + j != self.degrees[a] + 1:
                            raise DomainError(f"differential entry ({b},{a}) has the wrong degree")
                        terms[a].append((b, i, j, c))
        self._dterms = terms
        qterms: list[list] = [[] for _ in self.degrees]
        for b, row in enumerate(self.qgen.rows):
            for a in range(self.qgen.ncols):
                c = f.vget(row, a)
                if c:
                    if self.degrees[a] != self.degrees[b]:
                        raise DomainError("q must preserve generator degrees")
                    qterms[a].append((b, c))
        self._qterms = qterms
        self._cache: dict = {}

    @property
    def ngens(self) -> int:
        return len(self.degrees)

    def offsets(self, N: int) -> tuple[list[int], int]:
        """Offset of each generator block in degree N, and the total dimension."""
        offs, tot = [], 0
        for d in self.degrees:
            offs.append(tot)
            if N >= d:
                tot += N - d + 1
        return offs, tot

    def dim(self, N: int) -> int:
        return self.offsets(N)[1]

    def d_matrix(self, N: int) -> Matrix:
        key = ("d", N)
        if key not in self._cache:
            src, n = self.offsets(N)
            dst, m = self.offsets(N + 1)
            B = MatrixBuilder(self.field, m, n)
            for a, da in enumerate(self.degrees):
                e = N - da
                if e < 0:
                    continue
                for b, i, j, c in self._dterms[a]:
                    for p in range(e + 1):
                        B.add(dst[b] + p + j, src[a] + p, c)
            self._cache[key] = B.build()
        return self._cache[key]

    def q_matrix(self, N: int) -> Matrix:
        key = ("q", N)
        if key not in self._cache:
            offs, n = self.offsets(N)
            f = self.field
            B = MatrixBuilder(f, n, n)
            for a, da in enumerate(self.degrees):
                e = N - da
                if e < 0:
                    continue
                qinv = q_matrix_f2(e, 2)
                cols = qinv.columns()
                for p in range(e + 1):
                    col = cols[p]
                    for b, c in self._qterms[a]:
                        for pp in range(e + 1):
                            if (col >> pp) & 1:
                                B.add(offs[b] + pp, offs[a] + p, c)
            self._cache[key] = B.build()
        return self._cache[key]

    def x_matrix(self, var: int, N: int) -> Matrix:
        """Multiplication by x1 (var=1) or x2 (var=2) from degree N to N+1."""
        key = ("x", var, N)
        if key not in self._cache:
            src, n = self.offsets(N)
            dst, m = self.offsets(N + 1)
            B = MatrixBuilder(self.field, m, n)
            for a, da in enumerate(self.degrees):
                for p in range(N - da + 1):
                    B.add(dst[a] + p + (var - 1), src[a] + p)
            self._cache[key] = B.build()
        return self._cache[key]

    def mul_monomial(self, v, N: int, i: int, j: int):
        """``v * x1^i x2^j`` for v in degree N."""
        f = self.field
        src, _ = self.offsets(N)
        dst, _ = self.offsets(N + i + j)
        out = f.zero_vec
        for a, da in enumerate(self.degrees):
            e = N - da
            if e < 0:
                continue
            for p in range(e + 1):
                c = f.vget(v, src[a] + p)
                if c:
                    out = f.vadd(out, f.vunit(dst[a] + p + j, c))
        return out

    def generator_degree_range(self) -> tuple[int, int]:
        return (min(self.degrees), max(self.degrees)) if self.degrees else (0, -1)


def beta(C: PerfectComplex) -> DgSModule:
    """The twisted tensor product of C with S (computes Ext over the exterior algebra)."""
    rep = validate(C)
    if not rep.ok:
        raise DomainError(f"invalid complex: {rep.first()}")
    f = C.field
    degrees: list[int] = []
    starts = {}
    for i in C.degrees():
        starts[i] = len(degrees)
        degrees.extend([i] * C.dim(i))
    n = len(degrees)
    d0 = MatrixBuilder(f, n, n)
    d1 = MatrixBuilder(f, n, n)
    d2 = MatrixBuilder(f, n, n)
    qb = MatrixBuilder(f, n, n)

    def place(B: MatrixBuilder, M: Matrix, r0: int, c0: int):
        for r, row in enumerate(M.rows):
            for c in range(M.ncols):
                s = f.vget(row, c)
                if s:
                    B.add(r0 + r, c0 + c, s)

    for i in C.degrees():
        T = C.term(i)
        s = starts[i]
        place(d1, T.act_y1, s, s)
        place(d2, T.act_y2, s, s)
        place(qb, T.act_q, s, s)
        if i < C.hi:
            place(d0, C.diff(i), starts[i + 1], s)
    diff = {(0, 0): d0.build(), (1, 0): d1.build(), (0, 1): d2.build()}
    return DgSModule(f, C.group, tuple(degrees), diff, qb.build())


# ---------------------------------------------------------------------------
# homology of dg S-modules


@dataclass
class DgHomology:
    module: DgSModule
    pieces: dict[int, Quotient]
    q: dict[int, Matrix]
    lowest: int | None = None
    generator: object = None  # representative of the class spanning the lowest degree
    ideal: GradedIdeal | None = None
    stopped: bool = False

    def dims(self) -> dict[int, int]:
        return {N: Q.dim for N, Q in sorted(self.pieces.items()) if Q.dim}

    def total_dim(self) -> int:
        return sum(Q.dim for Q in self.pieces.values())

    def x_action(self, var: int, N: int) -> Matrix:
        """Induced multiplication by x_var from H^N to H^(N+1)."""
        return self.pieces[N].induced(self.module.x_matrix(var, N), self.pieces[N + 1])


def _homology_at(M: DgSModule, N: int) -> Quotient:
    Z = kernel(M.d_matrix(N))
    B = M.d_matrix(N - 1).image()
    return Quotient(Z, B)


def dg_homology(M: DgSModule, bound: int | None = None, stop: bool = True) -> DgHomology:
    """Homology of M degree by degree, with the annihilator of the lowest class.

    With ``stop`` the computation ends once the annihilator J of the lowest
    class is a parameter ideal of degrees (d1, d2), the homology seen so far
    has dimension d1*d2 and two consecutive zero degrees have been observed.
    Reaching ``bound`` first raises :class:`HomologyBoundError`.
    """
    f = M.field
    lo, hi = M.generator_degree_range()
    if not M.degrees:
        return DgHomology(M, {}, {}, stopped=True)
    if bound is None:
        bound = hi + 3
    out = DgHomology(M, {}, {})
    ideal_gens: list = []
    seen_dim = 0
    zeros_in_row = 0
    for N in range(lo, bound + 1):
        Q = _homology_at(M, N)
        out.pieces[N] = Q
        out.q[N] = Q.induced(M.q_matrix(N))
        seen_dim += Q.dim
        zeros_in_row = zeros_in_row + 1 if Q.dim == 0 else 0
        if out.lowest is None:
            if Q.dim == 0:
                continue
            out.lowest = N
            out.generator = Q.reps[0]
            if Q.dim != 1:
                continue
        if out.lowest is None or out.pieces[out.lowest].dim != 1:
            continue
        d = N - out.lowest
        # J_d = kernel of s -> [generator * s]
        images = [
            Q.coords_vec(M.mul_monomial(out.generator, out.lowest, d - p, p)) for p in range(d + 1)
        ]
        phi = Matrix.from_columns(f, Q.dim, images)
        if phi.rank() != Q.dim:
            raise InvariantViolation(f"homology is not generated by its lowest class in degree {N}")
        Jd = kernel(phi)
        current = GradedIdeal(f, ideal_gens)
        have = current.space(d)
        for v in Jd.basis:
            if not have.contains(v):
                ideal_gens.append((d, v))
                have = have + Subspace(f, d + 1, [v])
        out.ideal = GradedIdeal(f, ideal_gens)
        if stop and zeros_in_row >= 2 and N - 1 > out.lowest:
            chk = is_parameter_ideal(out.ideal)
            if chk.ok and seen_dim == chk.quotient_dim and d >= sum(chk.degrees) - 1:
                out.stopped = True
                return out
    if stop:
        raise HomologyBoundError(f"homology stop rule not met by degree {bound}")
    return out


# ---------------------------------------------------------------------------
# classification


@dataclass(frozen=True)
class ClassifyingTriple:
    l: int
    L: str
    J: GradedIdeal

    def __eq__(self, other) -> bool:
        if not isinstance(other, ClassifyingTriple):
            return NotImplemented
        return self.l == other.l and self.L == other.L and self.J == other.J

    def __hash__(self) -> int:
        return hash((self.l, self.L, self.J))

    def __str__(self) -> str:
        return f"(l={self.l}, L={self.L}, J={self.J!r})"


@dataclass
class ClassifyResult:
    triple: ClassifyingTriple
    m: int
    n: int
    t: int
    homology_dims: dict[int, int]
    homology: GradedQRep
    gr_table: list[dict] = dc_field(default_factory=list)

    @property
    def t_equals_m_plus_n(self) -> bool:
        return self.t == self.m + self.n


def classify(C: PerfectComplex, bound: int | None = None) -> ClassifyResult:
    rep = validate(C)
    if not rep.ok:
        raise DomainError(f"invalid complex: {rep.first()}")
    H = homology(C)
    if H.total_dim() != 4:
        raise DomainError(f"homology not 4-dimensional (dimension {H.total_dim()})")
    support = H.support()
    M = beta(C)
    DH = dg_homology(M, bound if bound is not None else C.hi + 3)
    l = DH.lowest
    if l != support[0]:
        raise InvariantViolation(f"lowest degree of Ext ({l}) differs from that of H*(C) ({support[0]})")
    if DH.pieces[l].dim != 1:
        raise InvariantViolation("H^l(beta(C)) is not one-dimensional")
    L = scalar_label(DH.q[l][0, 0])
    J = DH.ideal
    chk = is_parameter_ideal(J)
    if not chk.ok:
        raise InvariantViolation(f"annihilator is not a parameter ideal: {chk.reason}")
    if C.group is GroupTag.C3 and not is_invariant_ideal(J):
        raise InvariantViolation("annihilator ideal is not q-invariant")
    d1, d2 = chk.degrees
    m, n = d1 - 1, d2 - 1
    t = support[-1] - support[0]
    dims = H.dims()
    result = ClassifyResult(ClassifyingTriple(l, L, J), m, n, t, dims, H)
    result.gr_table = gr_table(result)
    if not result.t_equals_m_plus_n:
        raise InvariantViolation(f"t = {t} but m + n = {m + n}")
    expected = exterior_model_dims(l, m, n)
    if expected != dims:
        raise InvariantViolation(f"homology dims {dims} differ from the exterior model {expected}")
    return result


def exterior_model_dims(l: int, m: int, n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    for deg in (l, l + m, l + n, l + m + n):
        out[deg] = out.get(deg, 0) + 1
    return out


def gr_table(res: ClassifyResult) -> list[dict]:
    """Per degree: dimension and decomposition of H^i(C) into simple q-representations."""
    rows = []
    H = res.homology
    for deg in H.support():
        rows.append({"degree": deg, "dim": H.pieces[deg].dim, "decomposition": decompose_qrep(H.field, H.q_matrix(deg))})
    return rows


def same_quasi_iso_class(C1: PerfectComplex, C2: PerfectComplex) -> bool:
    return classify(C1).triple == classify(C2).triple


# ---------------------------------------------------------------------------
# the Koszul module of a triple


def equivariant_section(J: GradedIdeal) -> tuple[list[tuple[int, object]], Matrix]:
    """Lifts r_k in J of a basis of J/(x1,x2)J spanning a q-stable subspace.

    Returns the lifts (degree, vector) and the matrix R of ``q^-1`` on the
    cogenerator basis, so that ``q^-1 . r_i = sum_k R[k, i] r_k``.
    """
    f = J.field
    lifts: list = []
    blocks = []
    for piece in cogenerators(J):
        d, Qt = piece.degree, piece.quotient
        Rq = piece.q
        lift = Matrix.from_columns(f, d + 1, list(Qt.reps))
        QS = q_matrix(f, d, 1)
        Rinv = Rq @ Rq
        sigma = lift + QS @ lift @ Rinv + QS @ QS @ lift @ Rq
        for c in sigma.columns():
            lifts.append((d, c))
        blocks.append(Rinv)
        for i, c in enumerate(sigma.columns()):
            if not J.decomposables(d).contains(f.vadd(c, Qt.reps[i])):
                raise InvariantViolation("averaged section does not lift the cogenerators")
    return lifts, block_diag(blocks, f)


def koszul_module(L: str, J: GradedIdeal, group: GroupTag = GroupTag.C3) -> DgSModule:
    f = J.field
    chk = is_parameter_ideal(J)
    if not chk.ok:
        raise DomainError(f"not a parameter ideal: {chk.reason}")
    if group is GroupTag.C3 and not is_invariant_ideal(J):
        raise DomainError("ideal is not q-invariant")
    ell = label_scalar(L, f)
    if group is GroupTag.TRIVIAL and ell != 1:
        raise DomainError("the trivial group only has the trivial representation")
    if group is GroupTag.C3:
        lifts, R = equivariant_section(J)
    else:
        lifts, R = _plain_lifts(J), Matrix.identity(f, 2)
    (d1, r1), (d2, r2) = lifts
    m, n = d1 - 1, d2 - 1
    degrees = (0, m, n, m + n)
    diff: dict[tuple[int, int], MatrixBuilder] = {}

    def put(b: int, a: int, deg: int, vec):
        for p in range(deg + 1):
            c = f.vget(vec, p)
            if c:
                key = (deg - p, p)
                if key not in diff:
                    diff[key] = MatrixBuilder(f, 4, 4)
                diff[key].add(b, a, c)

    put(0, 1, d1, r1)  # D e1 = e0 r1
    put(0, 2, d2, r2)  # D e2 = e0 r2
    put(2, 3, d1, r1)  # D e12 = e2 r1 + e1 r2
    put(1, 3, d2, r2)
    det = f.add(f.mul(R[0, 0], R[1, 1]), f.mul(R[0, 1], R[1, 0]))
    qb = MatrixBuilder(f, 4, 4)
    qb.add(0, 0, ell)
    for i in range(2):
        for k in range(2):
            if R[k, i]:
                qb.add(1 + k, 1 + i, f.mul(ell, R[k, i]))
    qb.add(3, 3, f.mul(ell, det))
    return DgSModule(f, group, degrees, {k: B.build() for k, B in diff.items()}, qb.build())


def _plain_lifts(J: GradedIdeal) -> list[tuple[int, object]]:
    out = []
    for piece in cogenerators(J):
        out.extend((piece.degree, r) for r in piece.quotient.reps)
    return out


# ---------------------------------------------------------------------------
# tensoring with the injective resolution of F


def _dual_contract(j: int, p: int, i1: int, i2: int) -> int | None:
    """Index of ``delta_p . x1^i1 x2^i2`` in the dual basis of S_(j-i1-i2), or None."""
    k = j - i1 - i2
    if k < 0:
        return None
    pp = p - i2
    if 0 <= pp <= k:
        return pp
    return None


def epsilon_tensor(
    M: DgSModule,
    homology_info: DgHomology | None = None,
    truncate: bool = True,
    bottom: int | None = None,
) -> PerfectComplex:
    """M tensored over S with the resolution Lambda (x) S^dual, smart-truncated at the bottom.

    With ``truncate=False`` the raw slice in degrees ``bottom .. top`` is returned
    instead; its homology is only meaningful above the bottom degree.
    """
    f = M.field
    if not M.degrees:
        raise DomainError("zero dg module")
    top = max(M.degrees)
    if not truncate:
        lo = min(M.degrees) - 1 if bottom is None else bottom
        return _tensor_slice(M, lo, top)
    info = homology_info or dg_homology(M)
    if info.lowest is None:
        raise DomainError("dg module has zero homology")
    l0 = info.lowest
    terms, diffs = _tensor_window(M, l0 - 1, top)
    # smart truncation: replace the degree-l0 term by the cokernel of the incoming map
    T = terms[l0]
    coker = Quotient(Subspace.full(f, T.dim), diffs[l0 - 1].image())
    bottom_term = ModuleRep(
        f,
        M.group,
        coker.dim,
        coker.induced(T.act_y1),
        coker.induced(T.act_y2),
        coker.induced(T.act_q),
    )
    if not is_lambda_free(bottom_term).free:
        raise InvariantViolation("truncation cokernel not Lambda-free")
    new_terms = [bottom_term] + [terms[n] for n in range(l0 + 1, top + 1)]
    new_diffs = []
    if top > l0:
        lift = Matrix.from_columns(f, T.dim, list(coker.reps))
        new_diffs.append(diffs[l0] @ lift)
        new_diffs.extend(diffs[n] for n in range(l0 + 1, top))
    return make_complex(l0, new_terms, new_diffs)


def _tensor_slice(M: DgSModule, lo: int, top: int) -> PerfectComplex:
    terms, diffs = _tensor_window(M, lo, top)
    return make_complex(lo, [terms[n] for n in range(lo, top + 1)], [diffs[n] for n in range(lo, top)])


def _tensor_window(M: DgSModule, lo: int, top: int) -> tuple[dict, dict]:
    """Terms and differentials of M (x) Lambda (x) S^dual in degrees lo .. top."""
    f = M.field
    window = range(lo, top + 1)

    def layout(n: int):
        """Blocks (generator a, dual index p of S_j) of the degree-n term; j = deg_a - n."""
        blocks = []
        for a, da in enumerate(M.degrees):
            j = da - n
            if j >= 0:
                blocks.extend((a, j, p) for p in range(j + 1))
        return blocks

    layouts = {n: layout(n) for n in window}
    index = {n: {blk: i for i, blk in enumerate(layouts[n])} for n in window}
    psi_inv = psi_matrix(f, 2)
    ry1 = right_mult_matrix(ExtElem.y1(f))
    ry2 = right_mult_matrix(ExtElem.y2(f))

    def module(n: int) -> ModuleRep:
        blocks = layouts[n]
        k = len(blocks)
        dim = 4 * k
        y1 = MatrixBuilder(f, dim, dim)
        y2 = MatrixBuilder(f, dim, dim)
        q = MatrixBuilder(f, dim, dim)
        for bi, (a, j, p) in enumerate(blocks):
            for r in range(4):
                for c in range(4):
                    if ry1[r, c]:
                        y1.add(4 * bi + r, 4 * bi + c)
                    if ry2[r, c]:
                        y2.add(4 * bi + r, 4 * bi + c)
            if M.group is GroupTag.TRIVIAL:
                for r in range(4):
                    q.add(4 * bi + r, 4 * bi + r)
                continue
            # (g_a (x) lam (x) delta_p) q = (g_a q) (x) psi(q^-1) lam (x) delta_p . q
            # delta_p . q = Q_j^T delta_p, whose p'-coordinate is Q_j[p, p']
            Qj = q_matrix_f2(j, 1)
            for b, c in M._qterms[a]:
                for pp in range(j + 1):
                    if Qj[p, pp]:
                        bj = index[n][(b, j, pp)]
                        for r in range(4):
                            for s in range(4):
                                e = psi_inv[r, s]
                                if e:
                                    q.add(4 * bj + r, 4 * bi + s, f.mul(c, e))
        return ModuleRep(f, M.group, dim, y1.build(), y2.build(), q.build())

    def differential(n: int) -> Matrix:
        src, dst = layouts[n], index[n + 1]
        B = MatrixBuilder(f, 4 * len(layouts[n + 1]), 4 * len(src))
        for bi, (a, j, p) in enumerate(src):
            # g_a (x) d(lam (x) delta_p) = sum_i g_a (x) lam y_i (x) delta_p . x_i
            for (i1, i2), ry in (((1, 0), ry1), ((0, 1), ry2)):
                pp = _dual_contract(j, p, i1, i2)
                if pp is None:
                    continue
                bj = dst[(a, j - 1, pp)]
                for r in range(4):
                    for s in range(4):
                        if ry[r, s]:
                            B.add(4 * bj + r, 4 * bi + s)
            # D(g_a) (x) lam (x) delta_p = sum_b g_b (x) lam (x) delta_p . D_ba
            for b, i1, i2, c in M._dterms[a]:
                pp = _dual_contract(j, p, i1, i2)
                if pp is None:
                    continue
                bj = dst[(b, j - i1 - i2, pp)]
                for r in range(4):
                    B.add(4 * bj + r, 4 * bi + r, c)
        return B.build()

    terms = {n: module(n) for n in window}
    diffs = {n: differential(n) for n in range(lo, top)}
    return terms, diffs


def realize(T: ClassifyingTriple, group: GroupTag = GroupTag.C3) -> PerfectComplex:
    M = koszul_module(T.L, T.J, group)
    C0 = epsilon_tensor(M)
    return shift(C0, T.l - C0.lo)


__all__ = [
    "DgSModule",
    "DgHomology",
    "ClassifyingTriple",
    "ClassifyResult",
    "beta",
    "dg_homology",
    "classify",
    "koszul_module",
    "epsilon_tensor",
    "realize",
    "same_quasi_iso_class",
    "equivariant_section",
    "exterior_model_dims",
    "label_scalar",
    "scalar_label",
    "LABELS",
]

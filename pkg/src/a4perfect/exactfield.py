"""Exact linear algebra over F2 and GF(4).

Scalars are small integer codes.  Over F2 the codes are 0 and 1.  Over GF(4)
the code ``a + 2*b`` stands for ``a + b*w`` with ``w**2 = w + 1``; so ``w`` is
code 2 and ``w**2 = w + 1`` is code 3.

Vectors are bit-packed.  An F2 vector is a Python int whose bit ``j`` is
coordinate ``j``.  A GF(4) vector is a pair ``(lo, hi)`` of such ints (two bit
planes).  Matrices act on column vectors and store their rows packed.
"""

from __future__ import annotations

from random import Random
from dataclasses import dataclass
from typing import Iterable, Sequence


class NoSolution(ValueError):
    """Raised by :func:`solve` when the right-hand side is not in the column space."""


def _lowbit(v: int) -> int:
    return (v & -v).bit_length() - 1


def _parity(v: int) -> int:
    return bin(v).count("1") & 1


def _bits(v: int):
    while v:
        low = v & -v
        yield low.bit_length() - 1
        v ^= low


class Field:
    """Common interface of the two supported fields."""

    name: str
    size: int
    elements: tuple[int, ...]
    zero_vec: object

    def __repr__(self) -> str:
        return self.name

    def __reduce__(self):
        return (get_field, (self.name,))

    def nonzero(self) -> tuple[int, ...]:
        return self.elements[1:]


class _F2(Field):
    name = "F2"
    size = 2
    elements = (0, 1)
    zero_vec = 0

    # scalar arithmetic
    @staticmethod
    def add(a: int, b: int) -> int:
        return a ^ b

    @staticmethod
    def mul(a: int, b: int) -> int:
        return a & b

    @staticmethod
    def inv(a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no inverse in F2")
        return 1

    @staticmethod
    def frobenius(a: int) -> int:
        return a

    # packed vectors
    @staticmethod
    def vadd(u: int, v: int) -> int:
        return u ^ v

    @staticmethod
    def vscale(v: int, s: int) -> int:
        return v if s else 0

    @staticmethod
    def vget(v: int, j: int) -> int:
        return (v >> j) & 1

    @staticmethod
    def vunit(j: int, s: int = 1) -> int:
        return (s & 1) << j

    @staticmethod
    def vsupport(v: int) -> int:
        return v

    @staticmethod
    def vshift(v: int, k: int) -> int:
        return v << k

    @staticmethod
    def vmask(v: int, mask: int) -> int:
        return v & mask

    @staticmethod
    def vdot(u: int, v: int) -> int:
        return _parity(u & v)

    @staticmethod
    def vfrom(entries: Iterable[int]) -> int:
        out = 0
        for j, e in enumerate(entries):
            if e & 1:
                out |= 1 << j
        return out

    @staticmethod
    def vto(v: int, n: int) -> list[int]:
        return [(v >> j) & 1 for j in range(n)]


class _F4(Field):
    name = "F4"
    size = 4
    elements = (0, 1, 2, 3)
    zero_vec = (0, 0)

    _MUL = (
        (0, 0, 0, 0),
        (0, 1, 2, 3),
        (0, 2, 3, 1),
        (0, 3, 1, 2),
    )
    _INV = (None, 1, 3, 2)

    @staticmethod
    def add(a: int, b: int) -> int:
        return a ^ b

    @classmethod
    def mul(cls, a: int, b: int) -> int:
        return cls._MUL[a][b]

    @classmethod
    def inv(cls, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no inverse in GF(4)")
        return cls._INV[a]

    @classmethod
    def frobenius(cls, a: int) -> int:
        return cls._MUL[a][a]

    @staticmethod
    def vadd(u, v):
        return (u[0] ^ v[0], u[1] ^ v[1])

    @staticmethod
    def vscale(v, s: int):
        lo, hi = v
        if s == 0:
            return (0, 0)
        if s == 1:
            return v
        if s == 2:  # times w
            return (hi, lo ^ hi)
        return (lo ^ hi, lo)  # times w + 1

    @staticmethod
    def vget(v, j: int) -> int:
        return ((v[0] >> j) & 1) | (((v[1] >> j) & 1) << 1)

    @staticmethod
    def vunit(j: int, s: int = 1):
        return ((s & 1) << j, ((s >> 1) & 1) << j)

    @staticmethod
    def vsupport(v) -> int:
        return v[0] | v[1]

    @staticmethod
    def vshift(v, k: int):
        return (v[0] << k, v[1] << k)

    @staticmethod
    def vmask(v, mask: int):
        return (v[0] & mask, v[1] & mask)

    @staticmethod
    def vdot(u, v) -> int:
        a, b = u
        c, d = v
        bd = _parity(b & d)
        lo = _parity(a & c) ^ bd
        hi = _parity(a & d) ^ _parity(b & c) ^ bd
        return lo | (hi << 1)

    @staticmethod
    def vfrom(entries: Iterable[int]):
        lo = hi = 0
        for j, e in enumerate(entries):
            if e & 1:
                lo |= 1 << j
            if e & 2:
                hi |= 1 << j
        return (lo, hi)

    @staticmethod
    def vto(v, n: int) -> list[int]:
        lo, hi = v
        return [((lo >> j) & 1) | (((hi >> j) & 1) << 1) for j in range(n)]


F2 = _F2()
F4 = _F4()
W = 2  # the GF(4) code of w
W2 = 3  # the GF(4) code of w**2 = w + 1


def get_field(name: str) -> Field:
    if name in ("F2", "GF2", "GF(2)"):
        return F2
    if name in ("F4", "GF4", "GF(4)"):
        return F4
    raise ValueError(f"unknown field {name!r}")


def scalar_str(field: Field, s: int) -> str:
    return ("0", "1", "w", "w+1")[s]


def scalar_from_json(field: Field, obj) -> int:
    if field is F2:
        if obj not in (0, 1):
            raise ValueError(f"bad F2 scalar {obj!r}")
        return int(obj)
    if isinstance(obj, int) and obj in (0, 1):
        return obj
    if isinstance(obj, (list, tuple)) and len(obj) == 2 and all(x in (0, 1) for x in obj):
        return int(obj[0]) | (int(obj[1]) << 1)
    raise ValueError(f"bad GF(4) scalar {obj!r}")


def scalar_to_json(field: Field, s: int):
    if field is F2:
        return s
    return [s & 1, (s >> 1) & 1]


# ---------------------------------------------------------------------------
# row reduction kernels


def _reduce_f2(v: int, piv: dict[int, int], pmask: int) -> int:
    hit = v & pmask
    while hit:
        low = hit & -hit
        v ^= piv[low.bit_length() - 1]
        hit ^= low
    return v


def _insert_f2(v: int, piv: dict[int, int], pmask: int) -> tuple[int, int]:
    """Insert an already reduced nonzero vector; keep rows fully reduced."""
    p = _lowbit(v)
    bit = 1 << p
    for q, row in piv.items():
        if row & bit:
            piv[q] = row ^ v
    piv[p] = v
    return p, pmask | bit


def _reduce_f4(v, piv: dict, pmask: int):
    lo, hi = v
    hit = (lo | hi) & pmask
    while hit:
        low = hit & -hit
        p = low.bit_length() - 1
        c = (1 if lo & low else 0) | (2 if hi & low else 0)
        r = F4.vscale(piv[p], c)
        lo ^= r[0]
        hi ^= r[1]
        hit ^= low
    return (lo, hi)


def _insert_f4(v, piv: dict, pmask: int):
    p = _lowbit(v[0] | v[1])
    c = F4.vget(v, p)
    if c != 1:
        v = F4.vscale(v, F4.inv(c))
    bit = 1 << p
    for q, row in list(piv.items()):
        if (row[0] | row[1]) & bit:
            piv[q] = F4.vadd(row, F4.vscale(v, F4.vget(row, p)))
    piv[p] = v
    return p, pmask | bit


class Echelon:
    """Incrementally built reduced echelon basis (leftmost pivots, pivots = 1)."""

    __slots__ = ("field", "piv", "pmask")

    def __init__(self, field: Field, rows: Iterable = ()):
        self.field = field
        self.piv: dict = {}
        self.pmask = 0
        for r in rows:
            self.add(r)

    def reduce(self, v):
        if self.field is F2:
            return _reduce_f2(v, self.piv, self.pmask)
        return _reduce_f4(v, self.piv, self.pmask)

    def add(self, v) -> bool:
        """Add ``v`` to the span; return True if the rank went up."""
        v = self.reduce(v)
        if not self.field.vsupport(v):
            return False
        if self.field is F2:
            _, self.pmask = _insert_f2(v, self.piv, self.pmask)
        else:
            _, self.pmask = _insert_f4(v, self.piv, self.pmask)
        return True

    def contains(self, v) -> bool:
        return not self.field.vsupport(self.reduce(v))

    @property
    def rank(self) -> int:
        return len(self.piv)

    def pivots(self) -> tuple[int, ...]:
        return tuple(sorted(self.piv))

    def rows(self) -> tuple:
        return tuple(self.piv[p] for p in sorted(self.piv))


# ---------------------------------------------------------------------------
# matrices


@dataclass(frozen=True, eq=False)
class Matrix:
    """Dense matrix over F2 or GF(4); acts on column vectors."""

    field: Field
    nrows: int
    ncols: int
    rows: tuple

    # construction -------------------------------------------------------
    @classmethod
    def from_lists(cls, field: Field, entries: Sequence[Sequence[int]], ncols: int | None = None) -> "Matrix":
        entries = [list(r) for r in entries]
        if ncols is None:
            ncols = len(entries[0]) if entries else 0
        for r in entries:
            if len(r) != ncols:
                raise ValueError("ragged matrix")
        return cls(field, len(entries), ncols, tuple(field.vfrom(r) for r in entries))

    @classmethod
    def zeros(cls, field: Field, nrows: int, ncols: int) -> "Matrix":
        return cls(field, nrows, ncols, (field.zero_vec,) * nrows)

    @classmethod
    def identity(cls, field: Field, n: int) -> "Matrix":
        return cls(field, n, n, tuple(field.vunit(i) for i in range(n)))

    @classmethod
    def from_columns(cls, field: Field, nrows: int, cols: Sequence) -> "Matrix":
        """Build from packed column vectors (each of length ``nrows``)."""
        return cls(field, len(cols), nrows, tuple(cols)).T

    @classmethod
    def random(cls, field: Field, nrows: int, ncols: int, rng: Random) -> "Matrix":
        return cls.from_lists(
            field, [[rng.choice(field.elements) for _ in range(ncols)] for _ in range(nrows)], ncols
        )

    def to_lists(self) -> list[list[int]]:
        return [self.field.vto(r, self.ncols) for r in self.rows]

    # basic protocol -----------------------------------------------------
    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.field.vget(self.rows[i], j)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return (
            self.field is other.field
            and self.shape == other.shape
            and self.rows == other.rows
        )

    def __hash__(self) -> int:
        return hash((self.field.name, self.nrows, self.ncols, self.rows))

    def __repr__(self) -> str:
        body = "; ".join(" ".join(scalar_str(self.field, x) for x in r) for r in self.to_lists())
        return f"Matrix<{self.field.name} {self.nrows}x{self.ncols}>[{body}]"

    def is_zero(self) -> bool:
        sup = self.field.vsupport
        return not any(sup(r) for r in self.rows)

    def is_identity(self) -> bool:
        return self.nrows == self.ncols and self == Matrix.identity(self.field, self.nrows)

    # arithmetic ---------------------------------------------------------
    def _check(self, other: "Matrix") -> None:
        if self.field is not other.field:
            raise ValueError("field mismatch")

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check(other)
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")
        add = self.field.vadd
        return Matrix(self.field, self.nrows, self.ncols, tuple(add(a, b) for a, b in zip(self.rows, other.rows)))

    __sub__ = __add__

    def scale(self, s: int) -> "Matrix":
        sc = self.field.vscale
        return Matrix(self.field, self.nrows, self.ncols, tuple(sc(r, s) for r in self.rows))

    def __matmul__(self, other: "Matrix") -> "Matrix":
        self._check(other)
        if self.ncols != other.nrows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        f = self.field
        orows = other.rows
        out = []
        if f is F2:
            for r in self.rows:
                acc = 0
                while r:
                    low = r & -r
                    acc ^= orows[low.bit_length() - 1]
                    r ^= low
                out.append(acc)
        else:
            for r in self.rows:
                acc = (0, 0)
                for k in _bits(f.vsupport(r)):
                    acc = f.vadd(acc, f.vscale(orows[k], f.vget(r, k)))
                out.append(acc)
        return Matrix(f, self.nrows, other.ncols, tuple(out))

    def __pow__(self, k: int) -> "Matrix":
        if self.nrows != self.ncols:
            raise ValueError("power of non-square matrix")
        out = Matrix.identity(self.field, self.nrows)
        for _ in range(k):
            out = out @ self
        return out

    @property
    def T(self) -> "Matrix":
        f = self.field
        cols = []
        if f is F2:
            for j in range(self.ncols):
                bit = 1 << j
                c = 0
                for i, r in enumerate(self.rows):
                    if r & bit:
                        c |= 1 << i
                cols.append(c)
        else:
            for j in range(self.ncols):
                bit = 1 << j
                lo = hi = 0
                for i, (a, b) in enumerate(self.rows):
                    if a & bit:
                        lo |= 1 << i
                    if b & bit:
                        hi |= 1 << i
                cols.append((lo, hi))
        return Matrix(f, self.ncols, self.nrows, tuple(cols))

    def apply(self, v):
        """Matrix times packed column vector."""
        f = self.field
        dot = f.vdot
        out = f.zero_vec
        for i, r in enumerate(self.rows):
            s = dot(r, v)
            if s:
                out = f.vadd(out, f.vunit(i, s))
        return out

    def columns(self) -> tuple:
        return self.T.rows

    def column(self, j: int):
        f = self.field
        return f.vfrom(f.vget(r, j) for r in self.rows)

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "Matrix":
        f = self.field
        return Matrix.from_lists(f, [[self[i, j] for j in cols] for i in rows], len(cols))

    # structure ----------------------------------------------------------
    def rref(self) -> "Matrix":
        ech = Echelon(self.field, self.rows)
        rows = ech.rows()
        pad = (self.field.zero_vec,) * (self.nrows - len(rows))
        return Matrix(self.field, self.nrows, self.ncols, rows + pad)

    def pivots(self) -> tuple[int, ...]:
        return Echelon(self.field, self.rows).pivots()

    def rank(self) -> int:
        return Echelon(self.field, self.rows).rank

    def kernel(self) -> "Subspace":
        return kernel(self)

    def image(self) -> "Subspace":
        return Subspace(self.field, self.nrows, self.columns())

    def row_space(self) -> "Subspace":
        return Subspace(self.field, self.ncols, self.rows)


def hstack(mats: Sequence[Matrix]) -> Matrix:
    f = mats[0].field
    n = mats[0].nrows
    rows = [f.zero_vec] * n
    off = 0
    for m in mats:
        if m.nrows != n:
            raise ValueError("hstack row mismatch")
        for i, r in enumerate(m.rows):
            rows[i] = f.vadd(rows[i], f.vshift(r, off))
        off += m.ncols
    return Matrix(f, n, off, tuple(rows))


def vstack(mats: Sequence[Matrix]) -> Matrix:
    f = mats[0].field
    n = mats[0].ncols
    rows: list = []
    for m in mats:
        if m.ncols != n:
            raise ValueError("vstack column mismatch")
        rows.extend(m.rows)
    return Matrix(f, len(rows), n, tuple(rows))


def block_diag(mats: Sequence[Matrix], field: Field | None = None) -> Matrix:
    if not mats:
        return Matrix.zeros(field or F2, 0, 0)
    f = mats[0].field
    ncols = sum(m.ncols for m in mats)
    rows: list = []
    off = 0
    for m in mats:
        rows.extend(f.vshift(r, off) for r in m.rows)
        off += m.ncols
    return Matrix(f, len(rows), ncols, tuple(rows))


def kron(A: Matrix, B: Matrix) -> Matrix:
    """Kronecker product; row ``i*B.nrows + k``, column ``j*B.ncols + l``."""
    f = A.field
    rows = []
    for i in range(A.nrows):
        ra = A.rows[i]
        for k in range(B.nrows):
            acc = f.zero_vec
            for j in _bits(f.vsupport(ra)):
                acc = f.vadd(acc, f.vshift(f.vscale(B.rows[k], f.vget(ra, j)), j * B.ncols))
            rows.append(acc)
    return Matrix(f, A.nrows * B.nrows, A.ncols * B.ncols, tuple(rows))


class MatrixBuilder:
    """Accumulates entries ``(i, j) += s`` and packs them at the end."""

    def __init__(self, field: Field, nrows: int, ncols: int):
        self.field = field
        self.nrows = nrows
        self.ncols = ncols
        self._lo = [0] * nrows
        self._hi = [0] * nrows

    def add(self, i: int, j: int, s: int = 1) -> None:
        if s & 1:
            self._lo[i] ^= 1 << j
        if s & 2:
            self._hi[i] ^= 1 << j

    def add_row(self, i: int, v, shift: int = 0) -> None:
        if self.field is F2:
            self._lo[i] ^= v << shift
        else:
            self._lo[i] ^= v[0] << shift
            self._hi[i] ^= v[1] << shift

    def build(self) -> Matrix:
        if self.field is F2:
            rows = tuple(self._lo)
        else:
            rows = tuple(zip(self._lo, self._hi))
        return Matrix(self.field, self.nrows, self.ncols, rows)


# ---------------------------------------------------------------------------
# subspaces


class Subspace:
    """Subspace of F^n stored as a canonical reduced echelon basis.

    Two subspaces are equal exactly when their bases are bit-identical.
    """

    __slots__ = ("field", "n", "basis", "pivots", "_ech")

    def __init__(self, field: Field, n: int, vectors: Iterable = ()):
        ech = Echelon(field, vectors)
        self.field = field
        self.n = n
        self.basis = ech.rows()
        self.pivots = ech.pivots()
        self._ech = ech

    @classmethod
    def zero(cls, field: Field, n: int) -> "Subspace":
        return cls(field, n)

    @classmethod
    def full(cls, field: Field, n: int) -> "Subspace":
        return cls(field, n, (field.vunit(i) for i in range(n)))

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __len__(self) -> int:
        return self.dim

    def __repr__(self) -> str:
        vecs = ", ".join(
            "(" + ",".join(scalar_str(self.field, x) for x in self.field.vto(b, self.n)) + ")"
            for b in self.basis
        )
        return f"Subspace<{self.field.name}^{self.n} dim {self.dim}>[{vecs}]"

    def __eq__(self, other) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.field is other.field and self.n == other.n and self.basis == other.basis

    def __hash__(self) -> int:
        return hash((self.field.name, self.n, self.basis))

    def key(self) -> tuple:
        return self.basis

    def reduce(self, v):
        return self._ech.reduce(v)

    def contains(self, v) -> bool:
        return self._ech.contains(v)

    __contains__ = contains

    def issubset(self, other: "Subspace") -> bool:
        return all(other.contains(b) for b in self.basis)

    __le__ = issubset

    def __add__(self, other: "Subspace") -> "Subspace":
        return Subspace(self.field, self.n, self.basis + other.basis)

    def __and__(self, other: "Subspace") -> "Subspace":
        return intersection(self, other)

    def is_full(self) -> bool:
        return self.dim == self.n

    def matrix(self) -> Matrix:
        """Basis vectors as rows."""
        return Matrix(self.field, self.dim, self.n, self.basis)

    def quotient_map(self) -> tuple[Matrix, tuple[int, ...]]:
        """Linear map F^n -> F^(n - dim) with kernel exactly this subspace.

        Coordinates are the non-pivot positions of the reduced vector.
        """
        f = self.field
        free = tuple(j for j in range(self.n) if j not in set(self.pivots))
        cols = []
        for j in range(self.n):
            r = self.reduce(f.vunit(j))
            cols.append(f.vfrom(f.vget(r, k) for k in free))
        return Matrix.from_columns(f, len(free), cols), free


def intersection(a: Subspace, b: Subspace) -> Subspace:
    """Zassenhaus intersection."""
    f, n = a.field, a.n
    if a.dim == 0 or b.dim == 0:
        return Subspace.zero(f, n)
    ech = Echelon(f)
    for u in a.basis:
        ech.add(f.vadd(u, f.vshift(u, n)))
    for w in b.basis:
        ech.add(w)
    out = [_shift_down(f, r, n) for p, r in ech.piv.items() if p >= n]
    return Subspace(f, n, out)


def _shift_down(field: Field, v, n: int):
    if field is F2:
        return v >> n
    return (v[0] >> n, v[1] >> n)


def kernel(A: Matrix) -> Subspace:
    f = A.field
    ech = Echelon(f, A.rows)
    piv = ech.piv
    pivset = set(piv)
    basis = []
    for j in range(A.ncols):
        if j in pivset:
            continue
        v = f.vunit(j)
        bit = 1 << j
        for p, row in piv.items():
            if f.vsupport(row) & bit:
                # char 2: the pivot coordinate equals the entry itself
                v = f.vadd(v, f.vunit(p, f.vget(row, j)))
        basis.append(v)
    return Subspace(f, A.ncols, basis)


def solve(A: Matrix, b):
    """Some ``x`` with ``A @ x = b``; raises :class:`NoSolution` otherwise."""
    f = A.field
    n = A.ncols
    aug = [f.vadd(r, f.vunit(n, f.vget(b, i))) for i, r in enumerate(A.rows)]
    ech = Echelon(f, aug)
    if n in ech.piv:
        raise NoSolution("right-hand side not in the column space")
    x = f.zero_vec
    for p, row in ech.piv.items():
        s = f.vget(row, n)
        if s:
            x = f.vadd(x, f.vunit(p, s))
    return x


def rref(A: Matrix) -> Matrix:
    return A.rref()


def rank(A: Matrix) -> int:
    return A.rank()


def quotient_basis(W: Subspace, U: Subspace) -> list:
    """Canonical coset representatives of a basis of ``W / U``."""
    if not U.issubset(W):
        raise ValueError("quotient_basis: U is not contained in W")
    reduced = Echelon(W.field, (U.reduce(w) for w in W.basis))
    return list(reduced.rows())


class Quotient:
    """``W / U`` with canonical representatives and a coordinate map."""

    def __init__(self, W: Subspace, U: Subspace):
        self.W = W
        self.U = U
        self.field = W.field
        self.reps = quotient_basis(W, U)
        self._rep_ech = Echelon(W.field, self.reps)
        self._pivs = self._rep_ech.pivots()

    @property
    def dim(self) -> int:
        return len(self.reps)

    def coords(self, v) -> list[int]:
        """Coordinates of the class of ``v`` (``v`` must lie in W)."""
        f = self.field
        r = self.U.reduce(v)
        out = [f.vget(r, p) for p in self._pivs]
        return out

    def coords_vec(self, v):
        return self.field.vfrom(self.coords(v))

    def is_zero_class(self, v) -> bool:
        return self.U.contains(v)

    def induced(self, A: Matrix, target: "Quotient | None" = None) -> Matrix:
        """Matrix of the map induced by ``A`` from this quotient to ``target``."""
        target = target or self
        cols = [target.coords_vec(A.apply(r)) for r in self.reps]
        return Matrix.from_columns(self.field, target.dim, cols)


def preimage(A: Matrix, target: Subspace, domain: Subspace | None = None) -> Subspace:
    """``{x in domain : A x in target}``."""
    f = A.field
    if domain is None:
        domain = Subspace.full(f, A.ncols)
    if domain.dim == 0:
        return domain
    Pq, _ = target.quotient_map()
    B = Matrix.from_columns(f, A.ncols, domain.basis)
    K = kernel(Pq @ A @ B)
    cols = B
    return Subspace(f, A.ncols, (cols.apply(k) for k in K.basis))


def image_of(A: Matrix, sub: Subspace) -> Subspace:
    return Subspace(A.field, A.nrows, (A.apply(v) for v in sub.basis))


__all__ = [
    "Field",
    "F2",
    "F4",
    "W",
    "W2",
    "get_field",
    "Matrix",
    "MatrixBuilder",
    "Subspace",
    "Quotient",
    "Echelon",
    "NoSolution",
    "hstack",
    "vstack",
    "block_diag",
    "kron",
    "kernel",
    "solve",
    "rref",
    "rank",
    "quotient_basis",
    "intersection",
    "preimage",
    "image_of",
]

"""The graded polynomial ring S = F[x1, x2] and its homogeneous ideals.

A homogeneous polynomial of degree d is a packed vector of length d+1 where
coordinate j is the coefficient of ``x1^(d-j) x2^j``.  Over F2 multiplication of
homogeneous forms is carry-less multiplication of the bitmasks.

The generator q of C3 acts on S by ``x1 -> x1 + x2``, ``x2 -> x1``; this is
the contragredient of the action ``y1 -> y2``, ``y2 -> y1 + y2`` on the
exterior algebra.
"""

from __future__ import annotations

import os
import re
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from itertools import product

from .errors import DomainError, InvariantViolation
from .exactfield import F2, F4, Field, Matrix, Quotient, Subspace, get_field, scalar_str

DEFAULT_LIMIT = {"F2": 12, "F4": 8}
LIMIT_ENV = "A4PERFECT_ENUM_LIMIT"


class EnumerationLimit(DomainError):
    """Requested degrees exceed the configured enumeration limit."""


def enumeration_limit(field: Field) -> int:
    env = os.environ.get(LIMIT_ENV)
    if env:
        try:
            return int(env)
        except ValueError:
            raise DomainError(f"{LIMIT_ENV} must be an integer, got {env!r}") from None
    return DEFAULT_LIMIT[field.name]


# ---------------------------------------------------------------------------
# homogeneous arithmetic on packed vectors


def _clmul(a: int, b: int) -> int:
    r = 0
    while b:
        low = b & -b
        r ^= a << (low.bit_length() - 1)
        b ^= low
    return r


def hmul(field: Field, u, v):
    """Product of homogeneous forms given as packed vectors."""
    if field is F2:
        return _clmul(u, v)
    a, b = u
    c, d = v
    bd = _clmul(b, d)
    return (_clmul(a, c) ^ bd, _clmul(a, d) ^ _clmul(b, c) ^ bd)


def _f2_apply(M: Matrix, field: Field, v):
    """Apply an F2 matrix to a vector over either field (coefficient-wise)."""
    if field is F2:
        return M.apply(v)
    return (M.apply(v[0]), M.apply(v[1]))


def _pow_f2(u: int, k: int) -> int:
    out = 1
    for _ in range(k):
        out = _clmul(out, u)
    return out


# q.x1 = x1 + x2, q.x2 = x1
_Q_LINEAR = {1: (0b11, 0b01), 2: (0b10, 0b11)}  # power -> (image of x1, image of x2)


@lru_cache(maxsize=None)
def q_matrix_f2(d: int, power: int) -> Matrix:
    """Matrix of ``f -> q^power . f`` on S_d over F2."""
    power %= 3
    if power == 0:
        return Matrix.identity(F2, d + 1)
    a, b = _Q_LINEAR[power]
    cols = [_clmul(_pow_f2(a, d - j), _pow_f2(b, j)) for j in range(d + 1)]
    return Matrix.from_columns(F2, d + 1, cols)


_LIFT_CACHE: dict = {}


def lift_matrix(M: Matrix, field: Field) -> Matrix:
    """An F2 matrix viewed over ``field``."""
    if field is F2:
        return M
    key = (id(M), field.name)
    hit = _LIFT_CACHE.get(key)
    if hit is None or hit[0] is not M:
        hit = (M, Matrix(field, M.nrows, M.ncols, tuple((r, 0) for r in M.rows)))
        _LIFT_CACHE[key] = hit
    return hit[1]


def q_matrix(field: Field, d: int, power: int = 1) -> Matrix:
    return lift_matrix(q_matrix_f2(d, power), field)


@lru_cache(maxsize=None)
def sq_matrix_f2(k: int, d: int) -> Matrix:
    """Matrix of Sq^k : S_d -> S_(d+k) over F2."""
    cols = []
    for j in range(d + 1):
        a, b = d - j, j
        col = 0
        for i in range(k + 1):
            l = k - i
            if (a & i) == i and (b & l) == l and i <= a and l <= b:
                col ^= 1 << (b + l)
        cols.append(col)
    return Matrix.from_columns(F2, d + k + 1, cols)


# ---------------------------------------------------------------------------
# polynomials


@dataclass(frozen=True)
class Poly:
    """A polynomial as a map from degree to packed coefficient vector (zeros dropped)."""

    field: Field
    comps: tuple[tuple[int, object], ...]

    @classmethod
    def from_dict(cls, field: Field, comps: dict) -> "Poly":
        sup = field.vsupport
        return cls(field, tuple(sorted((d, v) for d, v in comps.items() if sup(v))))

    @classmethod
    def homogeneous(cls, field: Field, d: int, v) -> "Poly":
        return cls.from_dict(field, {d: v})

    @classmethod
    def monomial(cls, field: Field, a: int, b: int, c: int = 1) -> "Poly":
        return cls.homogeneous(field, a + b, field.vunit(b, c))

    @classmethod
    def zero(cls, field: Field = F2) -> "Poly":
        return cls(field, ())

    @classmethod
    def x1(cls, field: Field = F2) -> "Poly":
        return cls.monomial(field, 1, 0)

    @classmethod
    def x2(cls, field: Field = F2) -> "Poly":
        return cls.monomial(field, 0, 1)

    def as_dict(self) -> dict:
        return dict(self.comps)

    def is_zero(self) -> bool:
        return not self.comps

    def is_homogeneous(self) -> bool:
        return len(self.comps) <= 1

    @property
    def degree(self) -> int:
        if not self.comps:
            raise ValueError("zero polynomial has no degree")
        return self.comps[-1][0]

    def component(self, d: int):
        return self.as_dict().get(d, self.field.zero_vec)

    def hvec(self) -> tuple[int, object]:
        """(degree, vector) of a nonzero homogeneous polynomial."""
        if len(self.comps) != 1:
            raise ValueError("expected a nonzero homogeneous polynomial")
        return self.comps[0]

    def __add__(self, other: "Poly") -> "Poly":
        out = self.as_dict()
        for d, v in other.comps:
            out[d] = self.field.vadd(out[d], v) if d in out else v
        return Poly.from_dict(self.field, out)

    __sub__ = __add__

    def __mul__(self, other: "Poly") -> "Poly":
        out: dict = {}
        f = self.field
        for d, u in self.comps:
            for e, v in other.comps:
                w = hmul(f, u, v)
                out[d + e] = f.vadd(out[d + e], w) if d + e in out else w
        return Poly.from_dict(f, out)

    def __pow__(self, k: int) -> "Poly":
        out = Poly.homogeneous(self.field, 0, self.field.vunit(0))
        for _ in range(k):
            out = out * self
        return out

    def scale(self, c: int) -> "Poly":
        return Poly.from_dict(self.field, {d: self.field.vscale(v, c) for d, v in self.comps})

    def terms(self) -> list[tuple[int, int, int]]:
        """(exponent of x1, exponent of x2, coefficient) in lex order x1 > x2."""
        out = []
        f = self.field
        for d, v in self.comps:
            for j in range(d + 1):
                c = f.vget(v, j)
                if c:
                    out.append((d - j, j, c))
        out.sort(key=lambda t: (-t[0], -t[1]))
        return out

    def __str__(self) -> str:
        return format_poly(self)


def format_poly(p: Poly) -> str:
    parts = []
    for a, b, c in p.terms():
        mono = "*".join(
            s for s in (_power("x1", a), _power("x2", b)) if s
        )
        if c == 1:
            parts.append(mono or "1")
        else:
            cs = scalar_str(p.field, c)
            cs = "(w+1)" if c == 3 else cs
            parts.append(f"{cs}*{mono}" if mono else cs)
    return " + ".join(parts) if parts else "0"


def _power(var: str, e: int) -> str:
    if e == 0:
        return ""
    return var if e == 1 else f"{var}^{e}"


_TOKEN = re.compile(r"\s*(x1|x2|w|\d+|[+*^()])")


def parse_poly(text: str, field: Field = F2) -> Poly:
    """Parse e.g. ``"x1^3 + x1*x2^2"`` or ``"(w+1)*x1 + w*x2"``."""
    tokens = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ValueError(f"unexpected character in {text!r} at {pos}")
        tokens.append(m.group(1))
        pos = m.end()
        while pos < len(text) and text[pos].isspace():
            pos += 1
    parser = _Parser(tokens, field)
    out = parser.expr()
    if parser.i != len(tokens):
        raise ValueError(f"trailing input in {text!r}")
    return out


class _Parser:
    def __init__(self, tokens: list[str], field: Field):
        self.t = tokens
        self.i = 0
        self.f = field

    def peek(self):
        return self.t[self.i] if self.i < len(self.t) else None

    def take(self, tok: str | None = None) -> str:
        cur = self.peek()
        if cur is None or (tok is not None and cur != tok):
            raise ValueError(f"expected {tok or 'token'}, got {cur}")
        self.i += 1
        return cur

    def expr(self) -> Poly:
        out = self.term()
        while self.peek() == "+":
            self.take()
            out = out + self.term()
        return out

    def term(self) -> Poly:
        out = self.factor()
        while self.peek() == "*":
            self.take()
            out = out * self.factor()
        return out

    def factor(self) -> Poly:
        base = self.atom()
        if self.peek() == "^":
            self.take()
            base = base ** int(self.take())
        return base

    def atom(self) -> Poly:
        tok = self.take()
        f = self.f
        if tok == "x1":
            return Poly.x1(f)
        if tok == "x2":
            return Poly.x2(f)
        if tok == "w":
            if f is not F4:
                raise ValueError("coefficient w needs the field F4")
            return Poly.homogeneous(f, 0, f.vunit(0, 2))
        if tok.isdigit():
            return Poly.homogeneous(f, 0, f.vunit(0, int(tok) % 2))
        if tok == "(":
            out = self.expr()
            self.take(")")
            return out
        raise ValueError(f"unexpected token {tok!r}")


# ---------------------------------------------------------------------------
# group action, Reynolds operator, Steenrod squares


def q_act(power: int, f: Poly) -> Poly:
    fld = f.field
    return Poly.from_dict(fld, {d: _f2_apply(q_matrix_f2(d, power % 3), fld, v) for d, v in f.comps})


def q_vec(field: Field, d: int, v, power: int = 1):
    return _f2_apply(q_matrix_f2(d, power % 3), field, v)


def reynolds(f: Poly) -> Poly:
    return f + q_act(1, f) + q_act(2, f)


def reynolds_vec(field: Field, d: int, v):
    out = v
    for p in (1, 2):
        out = field.vadd(out, q_vec(field, d, v, p))
    return out


def steenrod_sq(k: int, f: Poly) -> Poly:
    """Sq^k applied componentwise; zero on components of degree below k."""
    if k < 0:
        raise ValueError("negative Steenrod index")
    fld = f.field
    return Poly.from_dict(
        fld, {d + k: _f2_apply(sq_matrix_f2(k, d), fld, v) for d, v in f.comps if k <= d}
    )


def sq_vec(field: Field, k: int, d: int, v):
    if k > d:
        return field.zero_vec
    return _f2_apply(sq_matrix_f2(k, d), field, v)


# ---------------------------------------------------------------------------
# ideals


class GradedIdeal:
    """Homogeneous ideal of S stored degreewise."""

    def __init__(self, field: Field, generators):
        self.field = field
        gens = []
        for g in generators:
            if isinstance(g, Poly):
                if g.is_zero():
                    continue
                gens.append(g.hvec())
            else:
                d, v = g
                if field.vsupport(v):
                    gens.append((d, v))
        gens.sort(key=lambda t: t[0])
        self.gens = tuple(gens)
        self._spaces: dict[int, Subspace] = {}
        self._mingens = None

    @classmethod
    def parse(cls, texts, field: Field = F2) -> "GradedIdeal":
        return cls(field, [parse_poly(t, field) for t in texts])

    def space(self, d: int) -> Subspace:
        """J_d as a subspace of S_d."""
        hit = self._spaces.get(d)
        if hit is None:
            f = self.field
            vecs = [f.vshift(v, k) for e, v in self.gens if e <= d for k in range(d - e + 1)]
            hit = Subspace(f, d + 1, vecs)
            self._spaces[d] = hit
        return hit

    def decomposables(self, d: int) -> Subspace:
        """(x1, x2) J_(d-1) inside S_d."""
        f = self.field
        if d == 0:
            return Subspace.zero(f, 1)
        prev = self.space(d - 1).basis
        return Subspace(f, d + 1, [v for v in prev] + [f.vshift(v, 1) for v in prev])

    def contains(self, p: Poly) -> bool:
        return all(self.space(d).contains(v) for d, v in p.comps)

    def contains_vec(self, d: int, v) -> bool:
        return self.space(d).contains(v)

    @property
    def max_generator_degree(self) -> int:
        return self.gens[-1][0] if self.gens else -1

    def minimal_generators(self) -> tuple[tuple[int, object], ...]:
        """A minimal generating set chosen among the given generators."""
        if self._mingens is None:
            kept: list = []
            by_deg: dict[int, list] = {}
            for d, v in self.gens:
                by_deg.setdefault(d, []).append(v)
            for d in sorted(by_deg):
                span = self.decomposables(d)
                for v in by_deg[d]:
                    if not span.contains(v):
                        kept.append((d, v))
                        span = span + Subspace(self.field, d + 1, [v])
            self._mingens = tuple(kept)
        return self._mingens

    def generator_polys(self) -> list[Poly]:
        return [Poly.homogeneous(self.field, d, v) for d, v in self.minimal_generators()]

    def generator_degrees(self) -> tuple[int, ...]:
        return tuple(d for d, _ in self.minimal_generators())

    def hilbert_quotient(self, upto: int) -> list[int]:
        """dim (S/J)_d for d = 0..upto."""
        return [d + 1 - self.space(d).dim for d in range(upto + 1)]

    def key(self) -> tuple:
        top = max(self.generator_degrees(), default=0)
        return (self.field.name,) + tuple(self.space(d).key() for d in range(top + 1))

    def __eq__(self, other) -> bool:
        if not isinstance(other, GradedIdeal):
            return NotImplemented
        return self.key() == other.key()

    def __hash__(self) -> int:
        return hash(self.key())

    def __repr__(self) -> str:
        return "(" + ", ".join(str(p) for p in self.generator_polys()) + ")"

    def to_strings(self) -> list[str]:
        return [str(p) for p in self.generator_polys()]


def ideal_membership(f: Poly, J: GradedIdeal) -> bool:
    return J.contains(f)


@dataclass(frozen=True)
class ParameterCheck:
    ok: bool
    degrees: tuple[int, ...]
    quotient_dim: int | None = None
    reason: str = ""

    def __bool__(self) -> bool:
        return self.ok


def is_parameter_ideal(J: GradedIdeal) -> ParameterCheck:
    degs = J.generator_degrees()
    if len(degs) != 2:
        return ParameterCheck(False, degs, None, f"{len(degs)} minimal generators")
    d1, d2 = degs
    if d1 == 0:
        return ParameterCheck(False, degs, None, "unit ideal")
    top = d1 + d2 - 1
    if not J.space(top).is_full():
        return ParameterCheck(False, degs, None, f"J does not contain S_{top}")
    qdim = sum(J.hilbert_quotient(top))
    if qdim != d1 * d2:
        return ParameterCheck(False, degs, qdim, f"dim S/J = {qdim}, expected {d1 * d2}")
    return ParameterCheck(True, degs, qdim)


@dataclass(frozen=True)
class CogeneratorPiece:
    degree: int
    quotient: Quotient
    q: Matrix  # left action of q on the classes


def cogenerators(J: GradedIdeal) -> list[CogeneratorPiece]:
    """J / (x1, x2) J degreewise with the induced q-action."""
    if not is_parameter_ideal(J):
        raise DomainError("cogenerators need a parameter ideal")
    out = []
    for d in sorted(set(J.generator_degrees())):
        Q = Quotient(J.space(d), J.decomposables(d))
        out.append(CogeneratorPiece(d, Q, Q.induced(q_matrix(J.field, d, 1))))
    return out


def is_invariant_ideal(J: GradedIdeal) -> bool:
    f = J.field
    return all(J.contains_vec(d, q_vec(f, d, v, 1)) for d, v in J.minimal_generators())


def is_steenrod_closed(J: GradedIdeal) -> bool:
    f = J.field
    return all(
        J.contains_vec(d + k, sq_vec(f, k, d, v)) for d, v in J.minimal_generators() for k in range(1, d + 1)
    )


def even_invariant_cogenerator(J: GradedIdeal) -> bool:
    """Does J/(x1,x2)J contain a q-fixed nonzero class in even degree?"""
    f = J.field
    for piece in cogenerators(J):
        if piece.degree % 2 == 0:
            n = piece.q.nrows
            if n - (piece.q + Matrix.identity(f, n)).rank() > 0:
                return True
    return False


def even_invariant_parameter(J: GradedIdeal) -> bool:
    """Is some Reynolds average of an even-degree element of J a minimal generator?

    Averages of a basis of J_d span the invariants of J_d, so this finds a
    q-invariant parameter of even degree whenever one exists.
    """
    if not is_parameter_ideal(J):
        raise DomainError("need a parameter ideal")
    f = J.field
    for d in sorted(set(J.generator_degrees())):
        if d % 2:
            continue
        dec = J.decomposables(d)
        if any(not dec.contains(reynolds_vec(f, d, v)) for v in J.space(d).basis):
            return True
    return False


def invariant_even_parameter_exists(J: GradedIdeal) -> bool:
    """Both routes above, which must agree."""
    a = even_invariant_cogenerator(J)
    b = even_invariant_parameter(J)
    if a != b:
        raise InvariantViolation("cogenerator and Reynolds routes disagree")
    return a


# ---------------------------------------------------------------------------
# enumeration of parameter ideals


def _nonzero_up_to_scalar(field: Field, n: int):
    """Vectors of length n whose lowest nonzero coordinate is 1."""
    for lead in range(n):
        for rest in product(field.elements, repeat=n - lead - 1):
            yield field.vfrom((0,) * lead + (1,) + rest)


def _vectors_with_support(field: Field, n: int, free: list[int]):
    """Nonzero vectors supported on ``free`` whose lowest nonzero coordinate is 1."""
    k = len(free)
    for lead in range(k):
        for rest in product(field.elements, repeat=k - lead - 1):
            entries = [0] * n
            entries[free[lead]] = 1
            for pos, c in zip(free[lead + 1 :], rest):
                entries[pos] = c
            yield field.vfrom(entries)


def _passes_filters(J: GradedIdeal, invariant: bool, steenrod: bool) -> bool:
    if invariant and not is_invariant_ideal(J):
        return False
    if steenrod and not is_steenrod_closed(J):
        return False
    return True


def check_limit(field: Field, d1: int, d2: int) -> None:
    if d1 < 1 or d2 < d1:
        raise DomainError(f"need 1 <= d1 <= d2, got ({d1}, {d2})")
    lim = enumeration_limit(field)
    if d1 + d2 > lim:
        raise EnumerationLimit(f"d1 + d2 = {d1 + d2} exceeds the enumeration limit {lim} for {field.name}")


def _pairs_for_f(args) -> list[tuple]:
    field_name, d1, d2, f, invariant, steenrod = args
    field = get_field(field_name)
    out = []
    fS = Subspace(field, d2 + 1, [field.vshift(f, k) for k in range(d2 - d1 + 1)])
    free = [j for j in range(d2 + 1) if j not in set(fS.pivots)]
    top = d1 + d2 - 1
    for g in _vectors_with_support(field, d2 + 1, free):
        # regular sequence iff f*S_(d2-1) + g*S_(d1-1) fills S_(d1+d2-1)
        vecs = [field.vshift(f, k) for k in range(d2)] + [field.vshift(g, k) for k in range(d1)]
        if Subspace(field, top + 1, vecs).dim != top + 1:
            continue
        J = GradedIdeal(field, [(d1, f), (d2, g)])
        if _passes_filters(J, invariant, steenrod):
            out.append((J.key(), f, g))
    return out


def enumerate_parameter_ideals(
    d1: int,
    d2: int,
    field: Field = F2,
    invariant: bool = False,
    steenrod: bool = False,
    jobs: int = 1,
) -> list[GradedIdeal]:
    """All parameter ideals with generator degrees (d1, d2), deduplicated."""
    check_limit(field, d1, d2)
    tasks = [(field.name, d1, d2, f, invariant, steenrod) for f in _nonzero_up_to_scalar(field, d1 + 1)]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            chunks = list(ex.map(_pairs_for_f, tasks, chunksize=max(1, len(tasks) // (4 * jobs))))
    else:
        chunks = [_pairs_for_f(t) for t in tasks]
    seen: dict = {}
    for chunk in chunks:
        for key, f, g in chunk:
            if key not in seen:
                seen[key] = (f, g)
    return [GradedIdeal(field, [(d1, f), (d2, g)]) for _, (f, g) in sorted(seen.items(), key=lambda kv: repr(kv[0]))]


# second enumerator: subspace chains and a gcd test


def _dehomogenize(field: Field, d: int, v) -> list[int]:
    """Coefficients of f(t, 1) by ascending power of t."""
    return [field.vget(v, d - i) for i in range(d + 1)]


def _trim(p: list[int]) -> list[int]:
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_mod(field: Field, a: list[int], b: list[int]) -> list[int]:
    a = list(a)
    inv = field.inv(b[-1])
    while len(_trim(a)) >= len(b):
        c = field.mul(a[-1], inv)
        shift = len(a) - len(b)
        for i, bc in enumerate(b):
            a[shift + i] ^= field.mul(c, bc)
    return a


def univariate_gcd_degree(field: Field, a: list[int], b: list[int]) -> int:
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _trim(_poly_mod(field, a, b))
    return len(a) - 1


def coprime_forms(field: Field, d1: int, f, d2: int, g) -> bool:
    if field.vget(f, 0) == 0 and field.vget(g, 0) == 0:
        return False  # x2 divides both
    return univariate_gcd_degree(field, _dehomogenize(field, d1, f), _dehomogenize(field, d2, g)) == 0


def count_parameter_ideals_by_chains(
    d1: int, d2: int, field: Field = F2, invariant: bool = False, steenrod: bool = False
) -> int:
    """Count (line in S_d1, line in S_d2 / line*S_(d2-d1)) chains giving coprime pairs."""
    check_limit(field, d1, d2)
    count = 0
    for f in _nonzero_up_to_scalar(field, d1 + 1):
        base = Subspace(field, d2 + 1, [field.vshift(f, k) for k in range(d2 - d1 + 1)])
        quotient = Quotient(Subspace.full(field, d2 + 1), base)
        for coords in _nonzero_up_to_scalar(field, quotient.dim):
            g = field.zero_vec
            for i, c in enumerate(field.vto(coords, quotient.dim)):
                if c:
                    g = field.vadd(g, field.vscale(quotient.reps[i], c))
            if d1 == d2 and Subspace(field, d2 + 1, [f, g]).basis[0] != f:
                continue  # count each plane once, from its canonical first line
            if not coprime_forms(field, d1, f, d2, g):
                continue
            if invariant or steenrod:
                J = GradedIdeal(field, [(d1, f), (d2, g)])
                if not _passes_filters(J, invariant, steenrod):
                    continue
            count += 1
    return count


OLIVER_IDEAL = ("x1*x2*(x1+x2)", "x1^4 + (x1*x2)^2 + x2^4")


def oliver_ideal(field: Field = F2) -> GradedIdeal:
    return GradedIdeal.parse(OLIVER_IDEAL, field)


__all__ = [
    "Poly",
    "GradedIdeal",
    "ParameterCheck",
    "CogeneratorPiece",
    "EnumerationLimit",
    "parse_poly",
    "format_poly",
    "q_act",
    "q_vec",
    "q_matrix",
    "reynolds",
    "reynolds_vec",
    "steenrod_sq",
    "sq_vec",
    "hmul",
    "ideal_membership",
    "is_parameter_ideal",
    "cogenerators",
    "is_invariant_ideal",
    "is_steenrod_closed",
    "invariant_even_parameter_exists",
    "even_invariant_cogenerator",
    "even_invariant_parameter",
    "enumerate_parameter_ideals",
    "count_parameter_ideals_by_chains",
    "coprime_forms",
    "univariate_gcd_degree",
    "oliver_ideal",
    "enumeration_limit",
    "check_limit",
]

"""The exterior algebra on y1, y2 in characteristic 2 and its skew group algebra.

Basis of the exterior algebra: ``(1, y1, y2, y1y2)``, indexed by the bitmask
of the variables present (0, 1, 2, 3).  The generator ``q`` of C3 acts by the
algebra automorphism ``y1 -> y2``, ``y2 -> y1 + y2``.  Elements of the skew
group algebra are lists of exterior-algebra elements indexed by ``e, q, q^2``
and multiply by ``(a q^i)(b q^j) = a * psi(q^i)(b) * q^(i+j)``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum

from .exactfield import F2, F4, Field, Matrix, scalar_str

MONOMIALS = ("1", "y1", "y2", "y1*y2")


class GroupTag(str, Enum):
    TRIVIAL = "trivial"
    C3 = "C3"

    @property
    def order(self) -> int:
        return 1 if self is GroupTag.TRIVIAL else 3

    @classmethod
    def parse(cls, s: "str | GroupTag") -> "GroupTag":
        if isinstance(s, GroupTag):
            return s
        for g in cls:
            if g.value.lower() == str(s).lower():
                return g
        raise ValueError(f"unknown group {s!r}")


# images of the basis monomials under psi(q): 1 -> 1, y1 -> y2, y2 -> y1+y2, y1y2 -> y1y2
_PSI_Q = ((1, 0, 0, 0), (0, 0, 1, 0), (0, 1, 1, 0), (0, 0, 0, 1))


@dataclass(frozen=True)
class ExtElem:
    field: Field
    coeffs: tuple[int, int, int, int]

    @classmethod
    def zero(cls, field: Field = F2) -> "ExtElem":
        return cls(field, (0, 0, 0, 0))

    @classmethod
    def one(cls, field: Field = F2) -> "ExtElem":
        return cls(field, (1, 0, 0, 0))

    @classmethod
    def basis(cls, field: Field, k: int, c: int = 1) -> "ExtElem":
        co = [0, 0, 0, 0]
        co[k] = c
        return cls(field, tuple(co))

    @classmethod
    def y1(cls, field: Field = F2) -> "ExtElem":
        return cls.basis(field, 1)

    @classmethod
    def y2(cls, field: Field = F2) -> "ExtElem":
        return cls.basis(field, 2)

    def __add__(self, other: "ExtElem") -> "ExtElem":
        _same_field(self.field, other.field)
        return ExtElem(self.field, tuple(a ^ b for a, b in zip(self.coeffs, other.coeffs)))

    def __mul__(self, other: "ExtElem") -> "ExtElem":
        _same_field(self.field, other.field)
        mul = self.field.mul
        out = [0, 0, 0, 0]
        for s, a in enumerate(self.coeffs):
            if not a:
                continue
            for t, b in enumerate(other.coeffs):
                if b and not (s & t):
                    out[s | t] ^= mul(a, b)
        return ExtElem(self.field, tuple(out))

    def scale(self, c: int) -> "ExtElem":
        return ExtElem(self.field, tuple(self.field.mul(c, a) for a in self.coeffs))

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def aug(self) -> int:
        return self.coeffs[0]

    def __str__(self) -> str:
        terms = [_coef_mono(self.field, c, MONOMIALS[k]) for k, c in enumerate(self.coeffs) if c]
        return " + ".join(terms) if terms else "0"


def _same_field(a: Field, b: Field) -> None:
    if a is not b:
        raise ValueError(f"field mismatch: {a} vs {b}")


def psi(power: int, a: ExtElem) -> ExtElem:
    """Apply the automorphism psi(q^power)."""
    for _ in range(power % 3):
        out = [0, 0, 0, 0]
        for k, c in enumerate(a.coeffs):
            if c:
                for j, e in enumerate(_PSI_Q[k]):
                    if e:
                        out[j] ^= c
        a = ExtElem(a.field, tuple(out))
    return a


def psi_matrix(field: Field, power: int) -> Matrix:
    """Matrix of psi(q^power) on the basis (1, y1, y2, y1y2), acting on columns."""
    cols = [field.vfrom(psi(power, ExtElem.basis(field, k)).coeffs) for k in range(4)]
    return Matrix.from_columns(field, 4, cols)


def right_mult_matrix(a: ExtElem) -> Matrix:
    """Matrix of ``x -> x * a`` on the exterior algebra."""
    f = a.field
    cols = [f.vfrom((ExtElem.basis(f, k) * a).coeffs) for k in range(4)]
    return Matrix.from_columns(f, 4, cols)


def left_mult_matrix(a: ExtElem) -> Matrix:
    f = a.field
    cols = [f.vfrom((a * ExtElem.basis(f, k)).coeffs) for k in range(4)]
    return Matrix.from_columns(f, 4, cols)


# ---------------------------------------------------------------------------
# skew group algebra


@dataclass(frozen=True)
class SkewElem:
    field: Field
    group: GroupTag
    parts: tuple[ExtElem, ...]

    @classmethod
    def zero(cls, field: Field = F2, group: GroupTag = GroupTag.C3) -> "SkewElem":
        return cls(field, group, (ExtElem.zero(field),) * group.order)

    @classmethod
    def one(cls, field: Field = F2, group: GroupTag = GroupTag.C3) -> "SkewElem":
        return cls.term(ExtElem.one(field), 0, group)

    @classmethod
    def term(cls, a: ExtElem, power: int, group: GroupTag = GroupTag.C3) -> "SkewElem":
        if group is GroupTag.TRIVIAL and power % 3:
            raise ValueError("trivial group has no element q")
        parts = [ExtElem.zero(a.field)] * group.order
        parts[power % group.order] = a
        return cls(a.field, group, tuple(parts))

    @classmethod
    def q(cls, field: Field = F2, power: int = 1) -> "SkewElem":
        return cls.term(ExtElem.one(field), power, GroupTag.C3)

    @classmethod
    def basis(cls, field: Field, group: GroupTag, index: int) -> "SkewElem":
        """Basis element number ``index = 4*g + k`` (monomial k, group power g)."""
        g, k = divmod(index, 4)
        return cls.term(ExtElem.basis(field, k), g, group)

    @property
    def dim(self) -> int:
        return 4 * self.group.order

    def _check(self, other: "SkewElem") -> None:
        _same_field(self.field, other.field)
        if self.group is not other.group:
            raise ValueError(f"group mismatch: {self.group} vs {other.group}")

    def __add__(self, other: "SkewElem") -> "SkewElem":
        self._check(other)
        return SkewElem(self.field, self.group, tuple(a + b for a, b in zip(self.parts, other.parts)))

    def __mul__(self, other: "SkewElem") -> "SkewElem":
        self._check(other)
        n = self.group.order
        out = [ExtElem.zero(self.field)] * n
        for i, a in enumerate(self.parts):
            if a.is_zero():
                continue
            for j, b in enumerate(other.parts):
                if b.is_zero():
                    continue
                k = (i + j) % n
                out[k] = out[k] + a * psi(i, b)
        return SkewElem(self.field, self.group, tuple(out))

    def scale(self, c: int) -> "SkewElem":
        return SkewElem(self.field, self.group, tuple(a.scale(c) for a in self.parts))

    def is_zero(self) -> bool:
        return all(a.is_zero() for a in self.parts)

    def vector(self):
        """Packed coefficient vector in the order (monomial, group power) -> 4*g + k."""
        return self.field.vfrom(c for a in self.parts for c in a.coeffs)

    @classmethod
    def from_vector(cls, field: Field, group: GroupTag, v) -> "SkewElem":
        co = field.vto(v, 4 * group.order)
        return cls(field, group, tuple(ExtElem(field, tuple(co[4 * g : 4 * g + 4])) for g in range(group.order)))

    def __str__(self) -> str:
        return format_skew(self)


def augment(a: SkewElem) -> int:
    s = 0
    for part in a.parts:
        s ^= part.aug()
    return s


def skew_mul(a: SkewElem, b: SkewElem) -> SkewElem:
    return a * b


def regular_right_action(field: Field, group: GroupTag, b: SkewElem) -> Matrix:
    """Matrix of ``x -> x * b`` on the skew group algebra (basis 4*g + k)."""
    n = 4 * group.order
    cols = [(SkewElem.basis(field, group, i) * b).vector() for i in range(n)]
    return Matrix.from_columns(field, n, cols)


# ---------------------------------------------------------------------------
# the group algebra of P = (Z/2)^2
#
# Basis of F[P]: group elements indexed by bitmask (e, f1, f2, f1f2).  The lift
# of q in A4 conjugates f1 -> f2, f2 -> f1f2.

_CONJ_Q = (0, 2, 3, 1)


def group_algebra_mul(field: Field, u: tuple, v: tuple) -> tuple:
    out = [0, 0, 0, 0]
    for g, a in enumerate(u):
        if a:
            for h, b in enumerate(v):
                if b:
                    out[g ^ h] ^= field.mul(a, b)
    return tuple(out)


def conj_q(u: tuple, power: int = 1) -> tuple:
    for _ in range(power % 3):
        out = [0, 0, 0, 0]
        for g, a in enumerate(u):
            out[_CONJ_Q[g]] ^= a
        u = tuple(out)
    return u


# y1 -> lambda1 + lambda1*lambda2 = f2 + f1f2 ; y2 -> lambda2 + lambda1*lambda2 = f1 + f1f2
_Y_IMAGES = {1: (0, 0, 1, 1), 2: (0, 1, 0, 1)}


def lambda_to_group_algebra(a: ExtElem) -> tuple:
    """Equivariant augmented isomorphism from the exterior algebra onto F[P]."""
    f = a.field
    images = {
        0: (1, 0, 0, 0),
        1: _Y_IMAGES[1],
        2: _Y_IMAGES[2],
        3: group_algebra_mul(f, _Y_IMAGES[1], _Y_IMAGES[2]),
    }
    out = [0, 0, 0, 0]
    for k, c in enumerate(a.coeffs):
        if c:
            for g, b in enumerate(images[k]):
                out[g] ^= f.mul(c, b)
    return tuple(out)


def group_algebra_aug(u: tuple) -> int:
    s = 0
    for a in u:
        s ^= a
    return s


# ---------------------------------------------------------------------------
# text form:  "y1*y2.q^2 + 1.e",  GF(4) coefficients as "w*y1.q", "(w+1)*1.e"

_GROUP_NAMES = ("e", "q", "q^2")


def _coef_mono(field: Field, c: int, mono: str) -> str:
    if c == 1:
        return mono
    cs = scalar_str(field, c)
    if c == 3:
        cs = "(w+1)"
    return f"{cs}*{mono}"


def format_skew(a: SkewElem) -> str:
    terms = []
    for g in reversed(range(a.group.order)):
        for k in reversed(range(4)):
            c = a.parts[g].coeffs[k]
            if c:
                terms.append(f"{_coef_mono(a.field, c, MONOMIALS[k])}.{_GROUP_NAMES[g]}")
    return " + ".join(terms) if terms else "0"


_TERM = re.compile(r"^(?:(w|\(w\+1\)|w\+1|1)\*)?(1|y1|y2|y1\*y2|y2\*y1)\.(e|q|q\^2|q2)$")


def parse_skew(text: str, field: Field = F2, group: GroupTag = GroupTag.C3) -> SkewElem:
    out = SkewElem.zero(field, group)
    text = text.replace(" ", "")
    if text in ("", "0"):
        return out
    for term in _split_terms(text):
        m = _TERM.match(term)
        if not m:
            raise ValueError(f"cannot parse term {term!r}")
        cs, mono, g = m.groups()
        c = {None: 1, "1": 1, "w": 2, "(w+1)": 3, "w+1": 3}[cs]
        if c > 1 and field is not F4:
            raise ValueError("coefficient w needs the field F4")
        k = {"1": 0, "y1": 1, "y2": 2, "y1*y2": 3, "y2*y1": 3}[mono]
        power = {"e": 0, "q": 1, "q^2": 2, "q2": 2}[g]
        out = out + SkewElem.term(ExtElem.basis(field, k, c), power, group)
    return out


def _split_terms(text: str) -> list[str]:
    terms, depth, cur = [], 0, ""
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "+" and depth == 0:
            terms.append(cur)
            cur = ""
        else:
            cur += ch
    terms.append(cur)
    return terms


__all__ = [
    "GroupTag",
    "ExtElem",
    "SkewElem",
    "psi",
    "psi_matrix",
    "right_mult_matrix",
    "left_mult_matrix",
    "skew_mul",
    "augment",
    "regular_right_action",
    "lambda_to_group_algebra",
    "group_algebra_mul",
    "group_algebra_aug",
    "conj_q",
    "format_skew",
    "parse_skew",
]

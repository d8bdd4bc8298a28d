"""The spectral sequence of the coradical filtration of a perfect complex.

``F^0 = socle``, ``F^1 = ker(y1 y2)``, ``F^2 = everything``.  Pages are computed
straight from the almost-cycle spaces

    Z_r^{k,t} = F^k C^t  intersected with  d^{-1}(F^{k-r} C^{t+1})
    E_r^{k,t} = Z_r^{k,t} / (Z_{r-1}^{k-1,t} + d Z_{r-1}^{k+r-1,t-1})

so every page can be checked against the homology of the previous one.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .errors import DomainError
from .exactfield import Matrix, Quotient, Subspace, image_of, kernel, preimage
from .perfcx import PerfectComplex, homology

COLUMNS = (0, 1, 2)
STABLE_PAGE = 3


@dataclass
class Filtration:
    complex: PerfectComplex
    levels: dict[int, tuple[Subspace, Subspace, Subspace]]

    def level(self, k: int, t: int) -> Subspace:
        C = self.complex
        n = C.dim(t)
        if k < 0 or t not in self.levels:
            return Subspace.zero(C.field, n)
        if k >= 2:
            return Subspace.full(C.field, n)
        return self.levels[t][k]


def filtration(C: PerfectComplex) -> Filtration:
    levels = {}
    for t in C.degrees():
        M = C.term(t)
        f1 = kernel(M.act_y12)
        f0 = kernel(M.act_y1) & kernel(M.act_y2) & f1
        levels[t] = (f0, f1, Subspace.full(C.field, M.dim))
    return Filtration(C, levels)


@dataclass
class Page:
    r: int
    complex: PerfectComplex
    entries: dict[tuple[int, int], Quotient]
    diffs: dict[tuple[int, int], Matrix]
    q: dict[tuple[int, int], Matrix]

    def dim(self, k: int, t: int) -> int:
        e = self.entries.get((k, t))
        return e.dim if e else 0

    def dims(self) -> dict[tuple[int, int], int]:
        return {kt: e.dim for kt, e in sorted(self.entries.items()) if e.dim}

    def column_dims(self) -> tuple[int, int, int]:
        return tuple(sum(self.dim(k, t) for t in self.complex.degrees()) for k in COLUMNS)

    def nonzero_differentials(self) -> list[tuple[tuple[int, int], tuple[int, int], int]]:
        out = []
        for (k, t), D in sorted(self.diffs.items()):
            rk = D.rank()
            if rk:
                out.append(((k, t), (k - self.r, t + 1), rk))
        return out


class _Cycles:
    def __init__(self, C: PerfectComplex):
        self.C = C
        self.F = filtration(C)
        self._cache: dict = {}

    def Z(self, r: int, k: int, t: int) -> Subspace:
        key = (r, k, t)
        if key not in self._cache:
            C = self.C
            if k < 0 or t not in self.F.levels:
                out = Subspace.zero(C.field, C.dim(t))
            else:
                out = preimage(C.diff(t), self.F.level(k - r, t + 1), self.F.level(k, t))
            self._cache[key] = out
        return self._cache[key]


def page(C: PerfectComplex, r: int, _cyc: _Cycles | None = None) -> Page:
    if r < 0:
        raise DomainError("page index must be non-negative")
    cyc = _cyc or _Cycles(C)
    entries: dict = {}
    qs: dict = {}
    for t in C.degrees():
        for k in COLUMNS:
            num = cyc.Z(r, k, t)
            den = cyc.Z(r - 1, k - 1, t) + image_of(C.diff(t - 1), cyc.Z(r - 1, k + r - 1, t - 1))
            Q = Quotient(num, den)
            entries[(k, t)] = Q
            qs[(k, t)] = Q.induced(C.term(t).act_q)
    diffs: dict = {}
    for (k, t), Q in entries.items():
        tgt = entries.get((k - r, t + 1))
        if tgt is None or Q.dim == 0 or tgt.dim == 0:
            continue
        diffs[(k, t)] = Q.induced(C.diff(t), tgt)
    return Page(r, C, entries, diffs, qs)


def pages(C: PerfectComplex, upto: int = STABLE_PAGE) -> list[Page]:
    cyc = _Cycles(C)
    return [page(C, r, cyc) for r in range(upto + 1)]


def check_page_consistency(P: Page, Pnext: Page) -> list[str]:
    """E_(r+1) must be the homology of (E_r, d_r), and d_r must square to zero and commute with q."""
    problems = []
    r = P.r
    for (k, t), Q in P.entries.items():
        out_d = P.diffs.get((k, t))
        in_d = P.diffs.get((k + r, t - 1))
        rank_out = out_d.rank() if out_d is not None else 0
        rank_in = in_d.rank() if in_d is not None else 0
        if Q.dim - rank_out - rank_in != Pnext.dim(k, t):
            problems.append(f"E_{r + 1}^({k},{t}) has dim {Pnext.dim(k, t)}, homology of E_{r} gives {Q.dim - rank_out - rank_in}")
        if out_d is not None:
            nxt = P.diffs.get((k - r, t + 1))
            if nxt is not None and not (nxt @ out_d).is_zero():
                problems.append(f"d_{r} squared is nonzero at ({k},{t})")
            if out_d @ P.q[(k, t)] != P.q[(k - r, t + 1)] @ out_d:
                problems.append(f"d_{r} does not commute with q at ({k},{t})")
    return problems


def e1_column_identity(P1: Page) -> list[str]:
    """dim E_1^{0,t} = dim E_1^{2,t} and dim E_1^{1,t} = 2 dim E_1^{2,t}."""
    out = []
    for t in P1.complex.degrees():
        a, b, c = (P1.dim(k, t) for k in COLUMNS)
        if a != c or b != 2 * c:
            out.append(f"E_1 columns at t={t} are ({a},{b},{c})")
    return out


@dataclass
class CollapseReport:
    l: int
    m: int | None
    n: int | None
    e2_dims: dict
    einf_dims: dict
    collapses_at_e2: bool
    column_dims: tuple[int, int, int]
    survivors: list[tuple[int, int]]
    expected_survivors: list[tuple[int, int]] | None
    gr_matches_homology: bool
    page_problems: list[str] = dc_field(default_factory=list)

    @property
    def ok(self) -> bool:
        return (
            self.collapses_at_e2
            and self.column_dims == (1, 2, 1)
            and self.survivors == self.expected_survivors
            and self.gr_matches_homology
            and not self.page_problems
        )


def survivors(P: Page, l: int = 0) -> list[tuple[int, int]]:
    """Bidegrees (k, t - l) of the classes on a page, with multiplicity."""
    out = []
    for (k, t), d in P.dims().items():
        out.extend([(k, t - l)] * d)
    return sorted(out)


def collapse_report(C: PerfectComplex, mn: tuple[int, int] | None = None) -> CollapseReport:
    """Collapse and survivor diagnostics; ``mn`` supplies (m, n) from elsewhere, else read off column 1."""
    H = homology(C)
    if H.total_dim() != 4:
        raise DomainError(f"homology not 4-dimensional (dimension {H.total_dim()})")
    ps = pages(C, STABLE_PAGE + 1)
    problems = []
    for a, b in zip(ps, ps[1:]):
        problems.extend(check_page_consistency(a, b))
    problems.extend(e1_column_identity(ps[1]))
    E2, E3, E4 = ps[2], ps[3], ps[4]
    if E3.dims() != E4.dims():
        problems.append("page 3 is not stable")
    l = H.support()[0]
    surv = survivors(E3, l)
    col1 = sorted(t for k, t in surv if k == 1)
    m = n = None
    expected = None
    if mn is not None:
        m, n = sorted(mn)
    elif len(col1) == 2:
        m, n = col1
    if m is not None:
        expected = sorted([(0, 0), (1, m), (1, n), (2, m + n)])
    gr_ok = all(
        sum(E3.dim(k, t) for k in COLUMNS) == H.pieces[t].dim for t in C.degrees()
    )
    return CollapseReport(
        l=l,
        m=m,
        n=n,
        e2_dims=E2.dims(),
        einf_dims=E3.dims(),
        collapses_at_e2=E2.dims() == E3.dims(),
        column_dims=E3.column_dims(),
        survivors=surv,
        expected_survivors=expected,
        gr_matches_homology=gr_ok,
        page_problems=problems,
    )


def format_page(P: Page) -> str:
    """Dimension grid (rows k = 2, 1, 0; columns t) with the nonzero differentials listed."""
    C = P.complex
    ts = list(C.degrees())
    if not ts:
        return f"E_{P.r}: empty\n"
    width = max(3, *(len(str(t)) for t in ts))
    lines = [f"E_{P.r}"]
    lines.append("k\\t " + " ".join(str(t).rjust(width) for t in ts))
    for k in reversed(COLUMNS):
        cells = [str(P.dim(k, t) or ".").rjust(width) for t in ts]
        lines.append(f"{k}   " + " ".join(cells))
    for src, dst, rk in P.nonzero_differentials():
        lines.append(f"d_{P.r}: {src} -> {dst} rank {rk}")
    return "\n".join(lines) + "\n"


__all__ = [
    "Filtration",
    "Page",
    "CollapseReport",
    "filtration",
    "page",
    "pages",
    "collapse_report",
    "check_page_consistency",
    "e1_column_identity",
    "survivors",
    "format_page",
    "STABLE_PAGE",
]

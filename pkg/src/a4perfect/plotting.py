"""Figures and tab-separated tables for the report commands.

Everything renders off-screen with the Agg backend and goes to files.
"""

from __future__ import annotations

import csv
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .perfcx import GradedQRep  # noqa: E402
from .specseq import COLUMNS, Page  # noqa: E402


def _finish(fig, path: str | Path) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path


def plot_page(P: Page, path: str | Path, survivors: list[tuple[int, int]] | None = None) -> Path:
    """Dimension chart of one page: a dot per nonzero entry, arrows for nonzero d_r."""
    ts = list(P.complex.degrees())
    fig, ax = plt.subplots(figsize=(max(4.0, 0.6 * len(ts) + 2), 3.2))
    for (k, t), d in P.dims().items():
        ax.scatter([t], [k], s=60 + 40 * d, color="tab:blue", zorder=3)
        ax.annotate(str(d), (t, k), textcoords="offset points", xytext=(6, 6), fontsize=8)
    for (k, t), (k2, t2), rk in P.nonzero_differentials():
        ax.annotate(
            "",
            xy=(t2, k2),
            xytext=(t, k),
            arrowprops=dict(arrowstyle="->", color="tab:red", lw=0.8 + 0.4 * rk),
        )
    if survivors:
        ax.set_title(f"E_{P.r}; survivors " + " ".join(f"({k},{t})" for k, t in survivors), fontsize=9)
    else:
        ax.set_title(f"E_{P.r}", fontsize=9)
    ax.set_yticks(list(COLUMNS))
    ax.set_ylim(-0.5, 2.5)
    if ts:
        ax.set_xticks(ts)
        ax.set_xlim(ts[0] - 0.5, ts[-1] + 0.5)
    ax.set_xlabel("t")
    ax.set_ylabel("k")
    ax.grid(True, lw=0.3)
    return _finish(fig, path)


def plot_homology(H: GradedQRep, path: str | Path, title: str = "homology") -> Path:
    """Bar chart of dim H^i per degree."""
    degs = sorted(H.pieces)
    dims = [H.pieces[d].dim for d in degs]
    fig, ax = plt.subplots(figsize=(max(3.5, 0.5 * len(degs) + 2), 2.8))
    ax.bar(degs, dims, color="tab:gray", width=0.6)
    ax.set_xlabel("degree")
    ax.set_ylabel("dim")
    ax.set_title(title, fontsize=9)
    if degs:
        ax.set_xticks(degs)
    return _finish(fig, path)


def write_tsv(rows: list[dict], path: str | Path) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    cols = list(rows[0]) if rows else []
    with open(path, "w", newline="") as fh:
        w = csv.DictWriter(fh, fieldnames=cols, delimiter="\t", lineterminator="\n")
        w.writeheader()
        w.writerows(rows)
    return path


def page_rows(P: Page) -> list[dict]:
    return [{"r": P.r, "k": k, "t": t, "dim": P.dim(k, t)} for t in P.complex.degrees() for k in COLUMNS]


__all__ = ["plot_page", "plot_homology", "write_tsv", "page_rows"]

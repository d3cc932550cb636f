"""Matplotlib renderings written next to CLI reports.

Everything goes straight to image files through the Agg backend; nothing
is shown interactively.
"""

from __future__ import annotations

from collections.abc import Sequence
from pathlib import Path

from .extremal import CanonicalForm, ExtremalResult, k_range, q_formula
from .oracle import ConjectureReport
from .table import ContingencyTable


def _plt():
    import matplotlib

    matplotlib.use("Agg", force=True)
    import matplotlib.pyplot as plt

    return plt


def save_table_heatmap(t: ContingencyTable, path: Path) -> Path:
    """Annotated heatmap of the contingency table."""
    plt = _plt()
    fig, ax = plt.subplots(figsize=(4.5, 4.0))
    image = ax.imshow(t.counts, cmap="Blues")
    for i, row in enumerate(t.counts):
        for j, value in enumerate(row):
            ax.text(j, i, str(value), ha="center", va="center", fontsize=11)
    ax.set_xticks(range(len(t.col_marginals)))
    ax.set_yticks(range(len(t.row_marginals)))
    ax.set_xticklabels([f"col {j+1}\n({m})" for j, m in enumerate(t.col_marginals)])
    ax.set_yticklabels([f"row {i+1}\n({m})" for i, m in enumerate(t.row_marginals)])
    ax.set_title(f"contingency table, n={t.n}")
    fig.colorbar(image, ax=ax, shrink=0.8)
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)
    return path


def save_q_profile(
    c: CanonicalForm,
    maximum: ExtremalResult,
    minimum: ExtremalResult,
    path: Path,
) -> Path:
    """The quadratic over the feasible interval with both extrema marked."""
    plt = _plt()
    lo, hi = k_range(c)
    ks = list(range(lo, hi + 1))
    qs = [q_formula(c, k) for k in ks]
    fig, ax = plt.subplots(figsize=(5.5, 4.0))
    ax.plot(ks, qs, "o-", color="steelblue", label="Q(k)")
    assert maximum.k_values is not None and minimum.k_values is not None
    ax.plot(
        list(maximum.k_values),
        [maximum.q_value] * len(maximum.k_values),
        "^",
        color="firebrick",
        markersize=11,
        label=f"max Q={maximum.q_value}",
    )
    ax.plot(
        list(minimum.k_values),
        [minimum.q_value] * len(minimum.k_values),
        "v",
        color="darkgreen",
        markersize=11,
        label=f"min Q={minimum.q_value}",
    )
    vertex = (2 * c.x + 2 * c.y - c.n) / 4
    ax.axvline(vertex, color="gray", linestyle=":", linewidth=1, label=f"vertex {vertex:g}")
    ax.set_xlabel("top-left cell k (canonical orientation)")
    ax.set_ylabel("squared-cell sum Q")
    ax.set_title(f"n={c.n}, x={c.x}, y={c.y}")
    ax.legend()
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)
    return path


def save_q_distribution(q_values: Sequence[int], extremal_q: int, objective: str, path: Path) -> Path:
    """Histogram of Q over all enumerated tables, extremum marked."""
    plt = _plt()
    fig, ax = plt.subplots(figsize=(5.5, 4.0))
    lo, hi = min(q_values), max(q_values)
    bins = range(lo, hi + 2) if hi - lo < 80 else 40
    ax.hist(q_values, bins=bins, color="steelblue", edgecolor="white")
    ax.axvline(extremal_q, color="firebrick", linewidth=2, label=f"{objective} Q={extremal_q}")
    ax.set_xlabel("squared-cell sum Q")
    ax.set_ylabel("tables")
    ax.set_title(f"{len(q_values)} tables with the given marginals")
    ax.legend()
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)
    return path


def save_adjusted_bars(values: dict[str, float | None], kind: str, path: Path) -> Path:
    """Raw, expected and adjusted values side by side; gaps where non-numeric."""
    plt = _plt()
    labels = [k for k, v in values.items() if v is not None]
    heights = [values[k] for k in labels]
    fig, ax = plt.subplots(figsize=(5.5, 4.0))
    ax.bar(labels, heights, color="steelblue")
    ax.axhline(0.0, color="gray", linewidth=1)
    ax.set_ylabel("value")
    ax.set_title(f"{kind}: raw vs adjusted")
    plt.setp(ax.get_xticklabels(), rotation=20, ha="right")
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)
    return path


def save_scan_summary(report: ConjectureReport, path: Path) -> Path:
    """Per-n bar chart of surveyed marginal pairs and containment failures."""
    plt = _plt()
    ns = sorted({s.spec.n for s in report.specs})
    scanned = [sum(1 for s in report.specs if s.spec.n == n) for n in ns]
    strict = [
        sum(1 for s in report.specs if s.spec.n == n and s.contained_count == 0) for n in ns
    ]
    fig, ax = plt.subplots(figsize=(6.0, 4.0))
    ax.bar(ns, scanned, color="steelblue", label="marginal pairs scanned")
    ax.bar(ns, strict, color="firebrick", label="no maximizer contained")
    ax.set_xlabel("n")
    ax.set_ylabel("marginal pairs")
    title = f"containment survey up to n={report.n_max}"
    if not report.complete:
        title += " (incomplete)"
    ax.set_title(title)
    ax.legend()
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)
    return path

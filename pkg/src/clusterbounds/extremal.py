"""Closed-form extremization of the squared-cell sum for 2x2 tables.

With both marginals fixed, a 2x2 contingency table is determined by its
top-left cell ``k`` and the squared-cell sum

    Q(k) = k^2 + (x-k)^2 + (y-k)^2 + (n+k-x-y)^2

is a convex parabola in ``k`` with vertex at ``v = (2x+2y-n)/4``.  After
reducing to the canonical orientation -- first row and first column hold
the larger cluster of their clustering, and the table is transposed if
needed so that ``x <= y`` -- the feasible interval shrinks to
``x+y-n <= k <= x`` and the arg-extrema have explicit formulas:

* maximum at ``k = x`` (both interval ends tie when ``x = n/2``);
* minimum at the feasible end ``k = x+y-n`` when the vertex falls left of
  the interval (``x+y > 3n/2``), otherwise at the integer(s) nearest the
  vertex, with a two-way tie exactly when the vertex sits on a half.

The enumeration in :mod:`clusterbounds.oracle` double-checks all of this
by brute force.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from enum import Enum

from .errors import DegenerateClusteringError, InputError
from .table import ContingencyTable

Counts = tuple[tuple[int, ...], ...]


class Objective(Enum):
    MAXIMUM = "maximum"
    MINIMUM = "minimum"


@dataclass(frozen=True)
class Transform:
    """Relabeling steps that carry a table from its original orientation
    to the canonical one.  Applied as row swap, then column swap, then
    transpose; inverted in the reverse order."""

    row_swap: bool
    col_swap: bool
    transposed: bool


@dataclass(frozen=True)
class CanonicalForm:
    """Reduced 2x2 marginals satisfying ``n/2 <= x <= y < n``."""

    n: int
    x: int
    y: int
    transform: Transform


@dataclass(frozen=True)
class ExtremalResult:
    """Arg-extrema of the squared-cell sum at fixed marginals.

    ``k_values`` holds the extremal top-left cells in canonical
    orientation, ascending (``None`` when the input was not 2x2, as in the
    general enumeration oracle).  ``tables`` are the corresponding tables
    in the caller's original orientation, in the same order.
    """

    objective: Objective
    k_values: tuple[int, ...] | None
    q_value: int
    tables: tuple[ContingencyTable, ...]


def _swap_rows(m: Counts) -> Counts:
    return (m[1], m[0])


def _swap_cols(m: Counts) -> Counts:
    return tuple(tuple(reversed(row)) for row in m)


def _transpose(m: Counts) -> Counts:
    return tuple(zip(*m))


def apply_transform(counts: Sequence[Sequence[int]], tf: Transform) -> Counts:
    """Map a table from the original orientation into the canonical one."""
    m: Counts = tuple(tuple(row) for row in counts)
    if tf.row_swap:
        m = _swap_rows(m)
    if tf.col_swap:
        m = _swap_cols(m)
    if tf.transposed:
        m = _transpose(m)
    return m


def invert_transform(counts: Sequence[Sequence[int]], tf: Transform) -> Counts:
    """Map a canonical-orientation table back to the original orientation."""
    m: Counts = tuple(tuple(row) for row in counts)
    if tf.transposed:
        m = _transpose(m)
    if tf.col_swap:
        m = _swap_cols(m)
    if tf.row_swap:
        m = _swap_rows(m)
    return m


def canonicalize(
    row_marginals: Sequence[int],
    col_marginals: Sequence[int],
    n: int,
) -> CanonicalForm:
    """Reduce 2x2 marginals to the canonical orientation.

    Cluster labels are arbitrary, so each clustering may put its larger
    cluster first, and the two clusterings may be interchanged; the
    recorded transform inverts the reduction exactly.
    """
    rows = tuple(row_marginals)
    cols = tuple(col_marginals)
    if len(rows) != 2 or len(cols) != 2:
        raise InputError("the canonical reduction applies to 2x2 marginals only")
    if any(m <= 0 for m in rows + cols):
        raise DegenerateClusteringError("every cluster must be non-empty")
    if sum(rows) != n or sum(cols) != n:
        raise InputError("row and column marginals must both sum to the stated total")
    row_swap = rows[0] < rows[1]
    col_swap = cols[0] < cols[1]
    x0 = max(rows)
    y0 = max(cols)
    transposed = x0 > y0
    x, y = (y0, x0) if transposed else (x0, y0)
    return CanonicalForm(n, x, y, Transform(row_swap, col_swap, transposed))


def k_range(c: CanonicalForm) -> tuple[int, int]:
    """Feasible interval for the top-left cell, inclusive on both ends.

    Non-empty because ``y < n``.
    """
    return c.x + c.y - c.n, c.x


def q_formula(c: CanonicalForm, k: int) -> int:
    """The quadratic evaluated at any integer, feasible or not.

    The formula (unlike the feasible interval) is symmetric about the
    vertex, which tests exploit.
    """
    return (
        k * k
        + (c.x - k) ** 2
        + (c.y - k) ** 2
        + (c.n + k - c.x - c.y) ** 2
    )


def q_of_k(c: CanonicalForm, k: int) -> int:
    """Squared-cell sum of the table with top-left cell ``k``."""
    lo, hi = k_range(c)
    if not lo <= k <= hi:
        raise InputError(f"k={k} outside the feasible interval [{lo}, {hi}]")
    return q_formula(c, k)


def _canonical_counts(c: CanonicalForm, k: int) -> Counts:
    return ((k, c.x - k), (c.y - k, c.n + k - c.x - c.y))


def _result(c: CanonicalForm, objective: Objective, ks: tuple[int, ...]) -> ExtremalResult:
    values = {q_of_k(c, k) for k in ks}
    assert len(values) == 1, "tied extremizers must share one Q value"
    tables = tuple(
        ContingencyTable.from_counts(invert_transform(_canonical_counts(c, k), c.transform))
        for k in ks
    )
    return ExtremalResult(objective, ks, values.pop(), tables)


def maximize(c: CanonicalForm) -> ExtremalResult:
    """Arg-maximum of the squared-cell sum over the feasible interval.

    The vertex never reaches the right end, so the maximum sits at
    ``k = x`` -- the table where the larger cluster of one clustering is
    wholly contained in the larger cluster of the other.  When ``x = n/2``
    the vertex is the interval midpoint and both ends attain the maximum.
    """
    lo, hi = k_range(c)
    ks = (hi,) if 2 * c.x > c.n else (lo, hi)
    return _result(c, Objective.MAXIMUM, ks)


def minimize(c: CanonicalForm) -> ExtremalResult:
    """Arg-minimum of the squared-cell sum over the feasible interval.

    When ``x + y > 3n/2`` the vertex falls left of the interval and the
    minimum sits at ``k = x+y-n``, the table whose smaller first-clustering
    cluster disappears into the larger second-clustering cluster.
    Otherwise the vertex is interior and the minimum is its nearest
    feasible integer; a vertex on an exact half yields both neighbours.
    """
    lo, _ = k_range(c)
    if 2 * (c.x + c.y) > 3 * c.n:
        ks: tuple[int, ...] = (lo,)
    else:
        vertex4 = 2 * c.x + 2 * c.y - c.n  # four times the vertex, kept integral
        if vertex4 % 4 == 2:  # fractional part of the vertex is exactly 1/2
            ks = ((vertex4 - 2) // 4, (vertex4 + 2) // 4)
        else:
            ks = ((vertex4 + 2) // 4,)  # round half up == nearest integer here
    return _result(c, Objective.MINIMUM, ks)


def extremal_tables(
    row_marginals: Sequence[int],
    col_marginals: Sequence[int],
    n: int,
    objective: Objective,
) -> ExtremalResult:
    """Canonicalize, extremize, and report in the caller's orientation."""
    c = canonicalize(row_marginals, col_marginals, n)
    return maximize(c) if objective is Objective.MAXIMUM else minimize(c)

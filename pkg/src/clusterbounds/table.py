"""Contingency tables for comparing two clusterings of one data set.

A clustering is a sequence of cluster identifiers, one per observation;
cross-tabulating two of them gives an r-by-s matrix of co-occurrence
counts.  Every pair-level agreement statistic used in this package (the
four pair classes and the sum of squared cell counts) derives from that
matrix with exact integer arithmetic.
"""

from __future__ import annotations

from collections.abc import Hashable, Sequence
from dataclasses import dataclass

from .errors import DegenerateClusteringError, InputError

# Totals are capped so that n**2, and with it the squared-cell sum and all
# pair counts, stay within 64 signed bits.  Python integers would not
# overflow anyway; the cap keeps the contract portable and catches absurd
# inputs early.
MAX_N = 2**31 - 1

Labeling = Sequence[Hashable]


@dataclass(frozen=True)
class ContingencyTable:
    """Cross-tabulation of two clusterings, with cached marginals.

    Immutable.  Build instances through :func:`table_from_labels` or
    :meth:`from_counts`, which validate; the raw constructor trusts its
    arguments and is reserved for callers that already guarantee
    consistency (e.g. the enumeration stream).
    """

    counts: tuple[tuple[int, ...], ...]
    row_marginals: tuple[int, ...]
    col_marginals: tuple[int, ...]
    n: int

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.row_marginals), len(self.col_marginals)

    @classmethod
    def from_counts(cls, counts: Sequence[Sequence[int]]) -> "ContingencyTable":
        """Validate a counts matrix and wrap it.

        Rejects ragged input, negative or non-integer cells, zero rows or
        columns (empty clusters), and totals beyond :data:`MAX_N`.
        """
        rows = tuple(tuple(row) for row in counts)
        if not rows or not rows[0]:
            raise InputError("a contingency table needs at least one row and one column")
        width = len(rows[0])
        for row in rows:
            if len(row) != width:
                raise InputError("all rows of the counts matrix must have the same length")
            for value in row:
                if not isinstance(value, int) or isinstance(value, bool) or value < 0:
                    raise InputError(f"cell counts must be non-negative integers, got {value!r}")
        row_marginals = tuple(sum(row) for row in rows)
        col_marginals = tuple(sum(col) for col in zip(*rows))
        if any(m == 0 for m in row_marginals):
            raise DegenerateClusteringError("empty cluster: a row of the table sums to zero")
        if any(m == 0 for m in col_marginals):
            raise DegenerateClusteringError("empty cluster: a column of the table sums to zero")
        n = sum(row_marginals)
        if n > MAX_N:
            raise InputError(f"total count {n} exceeds the supported maximum {MAX_N}")
        return cls(rows, row_marginals, col_marginals, n)


@dataclass(frozen=True)
class PairCounts:
    """The four agreement classes of unordered observation pairs.

    ``a`` pairs are co-clustered in both clusterings, ``b`` only in the
    first, ``c`` only in the second, ``d`` in neither.  They always sum to
    n(n-1)/2.
    """

    a: int
    b: int
    c: int
    d: int

    @property
    def total(self) -> int:
        return self.a + self.b + self.c + self.d


def table_from_labels(first: Labeling, second: Labeling) -> ContingencyTable:
    """Cross-tabulate two clusterings of the same observations.

    Rows follow the first labeling, columns the second.  Cluster order is
    first-appearance order within each sequence, so identical input always
    produces an identical table.
    """
    if len(first) != len(second):
        raise InputError(f"labelings differ in length: {len(first)} vs {len(second)}")
    if len(first) == 0:
        raise InputError("labelings must contain at least one observation")
    row_index: dict[Hashable, int] = {}
    col_index: dict[Hashable, int] = {}
    cells: list[tuple[int, int]] = []
    for f, s in zip(first, second):
        i = row_index.setdefault(f, len(row_index))
        j = col_index.setdefault(s, len(col_index))
        cells.append((i, j))
    counts = [[0] * len(col_index) for _ in row_index]
    for i, j in cells:
        counts[i][j] += 1
    return ContingencyTable.from_counts(counts)


def q_statistic(t: ContingencyTable) -> int:
    """Sum of squared cell counts.

    At fixed marginals every pair-counting index is a monotone function of
    this quantity, which is why the extremizers only ever look at it.
    Fits in 64 bits thanks to the construction-time cap on n.
    """
    return sum(v * v for row in t.counts for v in row)


def pair_counts_from_q(
    n: int,
    row_marginals: Sequence[int],
    col_marginals: Sequence[int],
    q: int,
) -> PairCounts:
    """Pair classes of any table with the given marginals and squared-cell sum.

    With marginals fixed the four classes depend on the table only through
    ``q``, so no cell values are needed.  Raises :class:`InputError` when
    ``q`` is not attainable with these marginals (odd or negative class
    numerators).
    """
    sr = sum(m * m for m in row_marginals)
    sc = sum(m * m for m in col_marginals)
    numerators = (q - n, sr - q, sc - q, q + n * n - sr - sc)
    for value in numerators:
        if value < 0 or value % 2:
            raise InputError(f"squared-cell sum {q} is not attainable with the given marginals")
    a, b, c, d = (value // 2 for value in numerators)
    return PairCounts(a, b, c, d)


def pair_counts(t: ContingencyTable) -> PairCounts:
    """Count the four pair classes of a table, exactly."""
    return pair_counts_from_q(t.n, t.row_marginals, t.col_marginals, q_statistic(t))

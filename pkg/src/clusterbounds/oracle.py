"""Exhaustive enumeration of contingency tables with fixed marginals.

This is the ground-truth companion to the closed-form 2x2 solver: it
streams every non-negative integer matrix with the requested row and
column sums (the lattice points of a transportation polytope), extremizes
the squared-cell sum by scanning, and runs the 3x3 containment survey
over maximal-agreement tables.

Enumeration is a row-by-row recursive fill.  Within a row, a cell ranges
from ``max(0, row_remaining - later column remainders)`` to
``min(row_remaining, column_remaining)``; those bounds leave no dead ends
because a non-negative integer transportation problem is feasible exactly
when its totals agree.  Cells are tried in ascending order, so tables
stream in lexicographic (row-major) order.
"""

from __future__ import annotations

import time
from collections.abc import Iterator, Sequence
from dataclasses import dataclass

from .errors import BudgetExceededError, DegenerateClusteringError, InputError
from .extremal import ExtremalResult, Objective, apply_transform, canonicalize
from .table import ContingencyTable

Counts = tuple[tuple[int, ...], ...]

DEFAULT_BUDGET = 10_000_000


@dataclass(frozen=True)
class MarginalSpec:
    """Row and column cluster sizes, both summing to ``n``."""

    row_marginals: tuple[int, ...]
    col_marginals: tuple[int, ...]
    n: int

    def __post_init__(self):
        object.__setattr__(self, "row_marginals", tuple(self.row_marginals))
        object.__setattr__(self, "col_marginals", tuple(self.col_marginals))
        if not self.row_marginals or not self.col_marginals:
            raise InputError("marginal specs need at least one row and one column")
        if any(m <= 0 for m in self.row_marginals + self.col_marginals):
            raise DegenerateClusteringError("every cluster size must be positive")
        if sum(self.row_marginals) != self.n or sum(self.col_marginals) != self.n:
            raise InputError("row and column marginals must both sum to n")

    @classmethod
    def of(cls, row_marginals: Sequence[int], col_marginals: Sequence[int]) -> "MarginalSpec":
        return cls(tuple(row_marginals), tuple(col_marginals), sum(row_marginals))

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.row_marginals), len(self.col_marginals)


def _row_fills(total: int, col_rem: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    """All splits of ``total`` across cells capped by ``col_rem``, ascending."""
    width = len(col_rem)
    suffix = [0] * (width + 1)
    for j in range(width - 1, -1, -1):
        suffix[j] = suffix[j + 1] + col_rem[j]

    def fill(j: int, remaining: int) -> Iterator[tuple[int, ...]]:
        if j == width - 1:
            yield (remaining,)
            return
        low = remaining - suffix[j + 1]
        if low < 0:
            low = 0
        high = min(remaining, col_rem[j])
        for v in range(low, high + 1):
            for tail in fill(j + 1, remaining - v):
                yield (v,) + tail

    return fill(0, total)


def _matrices(row_totals: tuple[int, ...], col_totals: tuple[int, ...]) -> Iterator[Counts]:
    """Every non-negative integer matrix with the given marginals, lex order."""
    depth = len(row_totals)

    def rows_from(i: int, col_rem: tuple[int, ...]) -> Iterator[Counts]:
        if i == depth - 1:
            yield (col_rem,)  # the last row is forced
            return
        for row in _row_fills(row_totals[i], col_rem):
            rest = tuple(c - v for c, v in zip(col_rem, row))
            for tail in rows_from(i + 1, rest):
                yield (row,) + tail

    return rows_from(0, col_totals)


def enumerate_tables(m: MarginalSpec, budget: int = DEFAULT_BUDGET) -> Iterator[ContingencyTable]:
    """Stream every table with the given marginals, exactly once.

    Deterministic lexicographic order.  Raises
    :class:`BudgetExceededError` as soon as the stream would exceed
    ``budget`` tables.
    """
    if budget < 1:
        raise InputError("budget must be a positive integer")
    emitted = 0
    for counts in _matrices(m.row_marginals, m.col_marginals):
        emitted += 1
        if emitted > budget:
            raise BudgetExceededError(budget)
        yield ContingencyTable(counts, m.row_marginals, m.col_marginals, m.n)


def _canonical_k_values(m: MarginalSpec, tables: Sequence[ContingencyTable]) -> tuple[int, ...]:
    tf = canonicalize(m.row_marginals, m.col_marginals, m.n).transform
    return tuple(sorted(apply_transform(t.counts, tf)[0][0] for t in tables))


def extremize_q_bruteforce(
    m: MarginalSpec,
    objective: Objective,
    budget: int = DEFAULT_BUDGET,
) -> ExtremalResult:
    """Scan all tables and return the complete tie set of Q-extremal ones.

    For 2x2 specs the result also carries the extremal top-left cells in
    canonical orientation, making it directly comparable with the
    closed-form solver.
    """
    if budget < 1:
        raise InputError("budget must be a positive integer")
    maximizing = objective is Objective.MAXIMUM
    best_q: int | None = None
    best: list[Counts] = []
    seen = 0
    for counts in _matrices(m.row_marginals, m.col_marginals):
        seen += 1
        if seen > budget:
            raise BudgetExceededError(budget)
        q = 0
        for row in counts:
            for v in row:
                q += v * v
        if best_q is None or (q > best_q if maximizing else q < best_q):
            best_q = q
            best = [counts]
        elif q == best_q:
            best.append(counts)
    assert best_q is not None  # the polytope always has at least one lattice point
    tables = tuple(
        ContingencyTable(counts, m.row_marginals, m.col_marginals, m.n) for counts in best
    )
    k_values = _canonical_k_values(m, tables) if m.shape == (2, 2) else None
    return ExtremalResult(objective, k_values, best_q, tables)


def containment_predicate(t: ContingencyTable) -> bool:
    """Is some biggest cluster wholly contained in a cluster of the other side?

    True when a row of maximal marginal has a single positive entry, or a
    column of maximal marginal does.  Ties for "biggest" are read
    permissively: any one of the tied clusters may witness containment.
    Invariant under row and column permutations and under transposition.
    """
    biggest_row = max(t.row_marginals)
    for i, m in enumerate(t.row_marginals):
        if m == biggest_row and sum(1 for v in t.counts[i] if v) == 1:
            return True
    biggest_col = max(t.col_marginals)
    for j, m in enumerate(t.col_marginals):
        if m == biggest_col and sum(1 for row in t.counts if row[j]) == 1:
            return True
    return False


def partitions_into_three(n: int) -> list[tuple[int, int, int]]:
    """Weakly decreasing triples of positive integers summing to ``n``,
    in descending lexicographic order."""
    parts = []
    for a in range(n - 2, (n + 2) // 3 - 1, -1):
        for b in range(min(a, n - a - 1), (n - a + 1) // 2 - 1, -1):
            parts.append((a, b, n - a - b))
    return parts


@dataclass(frozen=True)
class SpecScanResult:
    """Per-marginal-pair outcome of the containment survey.

    Carries both counts needed to judge the containment property under
    either reading: how many Q-maximizing tables there are, and how many
    of them satisfy the predicate.
    """

    spec: MarginalSpec
    max_q: int
    maximizer_count: int
    contained_count: int


@dataclass(frozen=True)
class Counterexample:
    """A Q-maximizing table that fails the containment predicate.

    ``tie_set`` holds every maximizer of the same spec so the failure can
    be audited against the tables that do satisfy the predicate.
    """

    spec: MarginalSpec
    table: ContingencyTable
    max_q: int
    tie_set: tuple[ContingencyTable, ...]
    contained_count: int


@dataclass(frozen=True)
class ConjectureReport:
    """Outcome of the exhaustive 3x3 containment survey."""

    n_max: int
    cases_scanned: int
    specs: tuple[SpecScanResult, ...]
    counterexamples: tuple[Counterexample, ...]
    strict_violations: int  # specs where NO maximizer satisfies containment
    complete: bool
    elapsed_seconds: float
    tie_rule: str = "any maximal-size cluster may witness containment"


def scan_conjecture_3x3(n_max: int, budget: int = DEFAULT_BUDGET) -> ConjectureReport:
    """Survey every 3x3 marginal pair with totals up to ``n_max``.

    Marginal compositions reduce to weakly decreasing triples, and (row,
    column) pairs are scanned with the row triple no later in the triple
    ordering than the column triple; this is sound because the predicate
    and the extremal Q are invariant under cluster permutations and
    transposition.  A budget overrun yields a partial report flagged
    incomplete rather than an exception.
    """
    if n_max < 3:
        raise InputError("n_max must be at least 3 to fit three non-empty clusters per side")
    start = time.perf_counter()
    pairs: list[MarginalSpec] = []
    for n in range(3, n_max + 1):
        triples = partitions_into_three(n)
        for i, rows in enumerate(triples):
            for cols in triples[i:]:
                pairs.append(MarginalSpec(rows, cols, n))
    spec_results: list[SpecScanResult] = []
    counterexamples: list[Counterexample] = []
    complete = True
    for spec in pairs:
        try:
            result = extremize_q_bruteforce(spec, Objective.MAXIMUM, budget)
        except BudgetExceededError:
            complete = False
            break
        contained = [containment_predicate(t) for t in result.tables]
        contained_count = sum(contained)
        spec_results.append(
            SpecScanResult(spec, result.q_value, len(result.tables), contained_count)
        )
        for table, ok in zip(result.tables, contained):
            if not ok:
                counterexamples.append(
                    Counterexample(spec, table, result.q_value, result.tables, contained_count)
                )
    elapsed = time.perf_counter() - start
    return ConjectureReport(
        n_max=n_max,
        cases_scanned=len(spec_results),
        specs=tuple(spec_results),
        counterexamples=tuple(counterexamples),
        strict_violations=sum(1 for s in spec_results if s.contained_count == 0),
        complete=complete,
        elapsed_seconds=elapsed,
    )

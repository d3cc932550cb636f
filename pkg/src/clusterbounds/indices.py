"""Pair-counting agreement indices and their chance-corrected forms.

All values are exact rationals.  The Fowlkes-Mallows index is irrational
in general, so its value is carried as an exact radicand (the squared
index) plus a decimal rendering; comparisons on it should use the
radicand.  Division-by-zero cases surface as an explicit ``undefined``
status, and a flat normalization (maximum equal to the null expectation)
as ``degenerate`` -- never as a sentinel number.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from decimal import Decimal, localcontext
from enum import Enum
from fractions import Fraction

from .errors import UnsupportedIndexError
from .table import ContingencyTable, PairCounts, pair_counts, pair_counts_from_q


class IndexKind(Enum):
    RAND = "rand"
    ADJUSTED_RAND = "adjusted_rand"
    JACCARD = "jaccard"
    FOWLKES_MALLOWS = "fowlkes_mallows"


class IndexStatus(Enum):
    DEFINED = "defined"
    UNDEFINED = "undefined"
    DEGENERATE = "degenerate"


def _exact_sqrt(value: Fraction) -> Fraction | None:
    """Square root of a non-negative rational if it is rational, else None."""
    rn = math.isqrt(value.numerator)
    rd = math.isqrt(value.denominator)
    if rn * rn == value.numerator and rd * rd == value.denominator:
        return Fraction(rn, rd)
    return None


@dataclass(frozen=True)
class IndexValue:
    """An index value in the exact form ``rational + root_sign * sqrt(radicand)``.

    Pure rational values have ``root_sign == 0`` and no radicand.  The
    radicand form appears only for Fowlkes-Mallows and its semimetric;
    perfect-square radicands are folded back into the rational part, so
    equality of dataclass fields is equality of values.
    """

    status: IndexStatus
    rational: Fraction | None = None
    root_sign: int = 0
    radicand: Fraction | None = None
    note: str | None = None

    @classmethod
    def from_fraction(cls, value: Fraction | int) -> "IndexValue":
        return cls(IndexStatus.DEFINED, Fraction(value))

    @classmethod
    def from_sqrt(cls, radicand: Fraction) -> "IndexValue":
        root = _exact_sqrt(radicand)
        if root is not None:
            return cls.from_fraction(root)
        return cls(IndexStatus.DEFINED, Fraction(0), 1, radicand)

    @classmethod
    def undefined(cls, note: str) -> "IndexValue":
        return cls(IndexStatus.UNDEFINED, note=note)

    @classmethod
    def degenerate(cls, note: str) -> "IndexValue":
        return cls(IndexStatus.DEGENERATE, note=note)

    @property
    def is_defined(self) -> bool:
        return self.status is IndexStatus.DEFINED

    def as_fraction(self) -> Fraction:
        """The exact rational value; raises if undefined or irrational."""
        if not self.is_defined:
            raise ValueError(f"index value is {self.status.value}")
        if self.root_sign:
            raise ValueError("index value is irrational; use the radicand form")
        return self.rational

    def one_minus(self) -> "IndexValue":
        """1 - value, preserving exactness; non-defined statuses pass through."""
        if not self.is_defined:
            return self
        return IndexValue(self.status, 1 - self.rational, -self.root_sign, self.radicand)

    def as_float(self) -> float | None:
        if not self.is_defined:
            return None
        value = float(self.rational)
        if self.root_sign:
            value += self.root_sign * math.sqrt(self.radicand)
        return value

    def decimal(self, digits: int = 15) -> str | None:
        """Decimal rendering, correctly rounded to ``digits`` significant figures."""
        if not self.is_defined:
            return None
        with localcontext() as ctx:
            ctx.prec = digits + 10
            value = Decimal(self.rational.numerator) / Decimal(self.rational.denominator)
            if self.root_sign:
                rad = Decimal(self.radicand.numerator) / Decimal(self.radicand.denominator)
                value += self.root_sign * rad.sqrt()
            ctx.prec = digits
            return str(+value)


def index(kind: IndexKind, p: PairCounts) -> IndexValue:
    """Evaluate a pair-counting agreement index on the four pair classes.

    Uses the standard pair-count definitions: Rand ``(a+d)/(a+b+c+d)``,
    Jaccard ``a/(a+b+c)``, Fowlkes-Mallows ``a/sqrt((a+b)(a+c))``, and the
    Hubert-Arabie adjusted Rand ``2(ad-bc)/((a+b)(b+d)+(a+c)(c+d))``.
    """
    if kind is IndexKind.RAND:
        if p.total == 0:
            return IndexValue.undefined("no observation pairs (n < 2)")
        return IndexValue.from_fraction(Fraction(p.a + p.d, p.total))
    if kind is IndexKind.JACCARD:
        denom = p.a + p.b + p.c
        if denom == 0:
            return IndexValue.undefined("no pair is co-clustered in either clustering")
        return IndexValue.from_fraction(Fraction(p.a, denom))
    if kind is IndexKind.FOWLKES_MALLOWS:
        denom = (p.a + p.b) * (p.a + p.c)
        if denom == 0:
            return IndexValue.undefined("one clustering has no co-clustered pair")
        return IndexValue.from_sqrt(Fraction(p.a * p.a, denom))
    if kind is IndexKind.ADJUSTED_RAND:
        denom = (p.a + p.b) * (p.b + p.d) + (p.a + p.c) * (p.c + p.d)
        if denom == 0:
            return IndexValue.undefined("adjustment denominator vanishes for these cluster sizes")
        return IndexValue.from_fraction(Fraction(2 * (p.a * p.d - p.b * p.c), denom))
    raise TypeError(f"unknown index kind: {kind!r}")


def expected_index(kind: IndexKind, t: ContingencyTable) -> IndexValue:
    """Expected index under the fixed-marginals permutation null.

    The null keeps both sets of cluster sizes and assigns labels at
    random, which makes the expected number of doubly co-clustered pairs
    equal to the product of within-clustering pair counts over the total
    pair count.  Only Rand (closed form above) and the adjusted Rand
    (zero, by construction of the centering) are supported.
    """
    if kind is IndexKind.ADJUSTED_RAND:
        return IndexValue.from_fraction(0)
    if kind is not IndexKind.RAND:
        raise UnsupportedIndexError(
            f"no closed-form permutation-null expectation for {kind.value}"
        )
    total = t.n * (t.n - 1) // 2
    if total == 0:
        return IndexValue.undefined("no observation pairs (n < 2)")
    row_pairs = sum(m * (m - 1) // 2 for m in t.row_marginals)
    col_pairs = sum(m * (m - 1) // 2 for m in t.col_marginals)
    expected_a = Fraction(row_pairs * col_pairs, total)
    # E[Rand] = (2 E[a] + total - row_pairs - col_pairs) / total, since
    # d = a + total - row_pairs - col_pairs holds for every table.
    return IndexValue.from_fraction((2 * expected_a + total - row_pairs - col_pairs) / total)


def max_adjusted_index(kind: IndexKind, t: ContingencyTable, max_q: int) -> IndexValue:
    """Chance-corrected index normalized by the marginal-constrained maximum.

    ``max_q`` must be the largest squared-cell sum attainable with ``t``'s
    marginals (from the closed-form extremizer for 2x2, or the enumeration
    oracle in general).  Because the supported indices increase with the
    squared-cell sum at fixed marginals, the index of any maximizing table
    can be computed from ``max_q`` alone.  The result never exceeds 1 and
    equals 1 exactly on maximizing tables; a flat landscape (maximum equal
    to the expectation) yields a ``degenerate`` value.
    """
    expected = expected_index(kind, t)
    observed = index(kind, pair_counts(t))
    best = index(kind, pair_counts_from_q(t.n, t.row_marginals, t.col_marginals, max_q))
    if not (expected.is_defined and observed.is_defined and best.is_defined):
        return IndexValue.undefined("index or expectation undefined for this table")
    denominator = best.as_fraction() - expected.as_fraction()
    if denominator == 0:
        return IndexValue.degenerate(
            "maximum index equals its null expectation; every feasible table scores the same"
        )
    return IndexValue.from_fraction(
        (observed.as_fraction() - expected.as_fraction()) / denominator
    )


def semimetric(kind: IndexKind, p: PairCounts) -> IndexValue:
    """Dissimilarity ``1 - index``; zero exactly when the index equals 1."""
    return index(kind, p).one_minus()

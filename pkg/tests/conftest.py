"""Shared test oracles, deliberately independent of the library internals.

Everything here recomputes quantities from first principles (literal
pair loops, rejection enumeration, factorial weights) so that library
bugs cannot hide behind shared code paths.
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction
from math import comb, factorial
from math import prod as _prod

import pytest


def naive_tables(rows, cols) -> list[tuple[tuple[int, ...], ...]]:
    """Every counts matrix with the given marginals, by rejection over the
    full cell product.  Exponential; only for small inputs."""
    r, s = len(rows), len(cols)
    ranges = [range(min(rows[i], cols[j]) + 1) for i in range(r) for j in range(s)]
    found = []
    for flat in itertools.product(*ranges):
        grid = tuple(tuple(flat[i * s : (i + 1) * s]) for i in range(r))
        if all(sum(grid[i]) == rows[i] for i in range(r)) and all(
            sum(grid[i][j] for i in range(r)) == cols[j] for j in range(s)
        ):
            found.append(grid)
    return found


def pair_tally(first, second) -> tuple[int, int, int, int]:
    """Literal loop over all unordered observation pairs."""
    a = b = c = d = 0
    items = list(zip(first, second))
    for (f1, s1), (f2, s2) in itertools.combinations(items, 2):
        same_first = f1 == f2
        same_second = s1 == s2
        if same_first and same_second:
            a += 1
        elif same_first:
            b += 1
        elif same_second:
            c += 1
        else:
            d += 1
    return a, b, c, d


def labelings_for(counts) -> tuple[list[str], list[str]]:
    """Two labelings whose cross-tabulation is exactly `counts`."""
    first: list[str] = []
    second: list[str] = []
    for i, row in enumerate(counts):
        for j, value in enumerate(row):
            first.extend([f"r{i}"] * value)
            second.extend([f"c{j}"] * value)
    return first, second


def comb_form_ari(counts) -> Fraction | None:
    """Adjusted Rand via the binomial-coefficient formulation, or None when
    its normalization denominator vanishes."""
    rows = [sum(row) for row in counts]
    cols = [sum(col) for col in zip(*counts)]
    n = sum(rows)
    sum_cells = sum(comb(v, 2) for row in counts for v in row)
    row_pairs = sum(comb(m, 2) for m in rows)
    col_pairs = sum(comb(m, 2) for m in cols)
    total = comb(n, 2)
    if total == 0:
        return None
    expected = Fraction(row_pairs * col_pairs, total)
    denominator = Fraction(row_pairs + col_pairs, 2) - expected
    if denominator == 0:
        return None
    return (sum_cells - expected) / denominator


def permutation_weight(counts) -> Fraction:
    """Probability of a table under the fixed-marginals permutation null."""
    rows = [sum(row) for row in counts]
    cols = [sum(col) for col in zip(*counts)]
    n = sum(rows)
    numerator = _prod(factorial(m) for m in rows) * _prod(factorial(m) for m in cols)
    denominator = factorial(n) * _prod(factorial(v) for row in counts for v in row)
    return Fraction(numerator, denominator)


def expected_rand_bruteforce(rows, cols) -> Fraction:
    """E[Rand] under the permutation null, averaging the literal pair tally
    over every feasible table with hypergeometric weights."""
    n = sum(rows)
    total_pairs = n * (n - 1) // 2
    acc = Fraction(0)
    weight_sum = Fraction(0)
    for grid in naive_tables(rows, cols):
        w = permutation_weight(grid)
        weight_sum += w
        a, _, _, d = pair_tally(*labelings_for(grid))
        acc += w * Fraction(a + d, total_pairs)
    assert weight_sum == 1
    return acc


def random_labeling_pair(rng: random.Random, max_clusters=4, max_n=50):
    """A random pair of labelings with every cluster non-empty."""
    r = rng.randint(1, max_clusters)
    s = rng.randint(1, max_clusters)
    n = rng.randint(max(r, s), max_n)
    first = [f"a{i}" for i in range(r)] + [f"a{rng.randrange(r)}" for _ in range(n - r)]
    second = [f"b{j}" for j in range(s)] + [f"b{rng.randrange(s)}" for _ in range(n - s)]
    rng.shuffle(first)
    rng.shuffle(second)
    return first, second


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20260809)

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from clusterbounds import (
    ContingencyTable,
    DegenerateClusteringError,
    InputError,
    Objective,
    Transform,
    apply_transform,
    canonicalize,
    extremal_tables,
    invert_transform,
    k_range,
    maximize,
    minimize,
    q_formula,
    q_of_k,
    q_statistic,
)

from conftest import naive_tables


@st.composite
def marginal_triples(draw, max_n=40):
    """(n, x, y) with 1 <= x, y <= n-1, in raw (uncanonicalized) form."""
    n = draw(st.integers(2, max_n))
    x = draw(st.integers(1, n - 1))
    y = draw(st.integers(1, n - 1))
    return n, x, y


# ------------------------------------------------------------------ #
# canonical reduction
# ------------------------------------------------------------------ #


def test_canonicalize_already_canonical():
    c = canonicalize((6, 4), (7, 3), 10)
    assert (c.x, c.y) == (6, 7)
    assert c.transform == Transform(False, False, False)


def test_canonicalize_swaps_both():
    c = canonicalize((4, 6), (3, 7), 10)
    assert (c.x, c.y) == (6, 7)
    assert c.transform == Transform(True, True, False)


def test_canonicalize_transposes_to_order_x_y():
    c = canonicalize((7, 3), (6, 4), 10)
    assert (c.x, c.y) == (6, 7)
    assert c.transform == Transform(False, False, True)


def test_canonicalize_rejects_zero_marginal():
    with pytest.raises(DegenerateClusteringError):
        canonicalize((10, 0), (7, 3), 10)


def test_canonicalize_rejects_mismatched_sums():
    with pytest.raises(InputError):
        canonicalize((6, 4), (7, 4), 10)


def test_canonicalize_rejects_non_2x2():
    with pytest.raises(InputError):
        canonicalize((4, 3, 3), (7, 3), 10)


@given(marginal_triples())
def test_canonicalize_lands_in_reduced_region(triple):
    n, x, y = triple
    c = canonicalize((x, n - x), (y, n - y), n)
    assert 2 * c.x >= n
    assert c.x <= c.y < n


@given(marginal_triples())
def test_transform_round_trips_any_matrix(triple):
    n, x, y = triple
    c = canonicalize((x, n - x), (y, n - y), n)
    marker = ((1, 2), (3, 4))  # four distinct cells expose any mis-ordered undo
    assert apply_transform(invert_transform(marker, c.transform), c.transform) == marker
    assert invert_transform(apply_transform(marker, c.transform), c.transform) == marker


# ------------------------------------------------------------------ #
# feasible interval and the quadratic
# ------------------------------------------------------------------ #


def test_k_range_examples():
    assert k_range(canonicalize((6, 4), (7, 3), 10)) == (3, 6)
    assert k_range(canonicalize((5, 5), (5, 5), 10)) == (0, 5)
    assert k_range(canonicalize((8, 2), (8, 2), 10)) == (6, 8)


def test_q_of_k_hand_values():
    c = canonicalize((6, 4), (7, 3), 10)
    assert q_of_k(c, 4) == 30
    assert q_of_k(c, 6) == 46
    assert q_of_k(c, 4) == q_statistic(ContingencyTable.from_counts([[4, 2], [3, 1]]))


def test_q_of_k_vertex_of_balanced_case():
    n = 12  # divisible by 4: all four cells equal n/4 at the vertex
    c = canonicalize((n // 2, n // 2), (n // 2, n // 2), n)
    assert q_of_k(c, n // 4) == n * n // 4


def test_q_of_k_rejects_infeasible_k():
    c = canonicalize((6, 4), (7, 3), 10)
    with pytest.raises(InputError):
        q_of_k(c, 2)
    with pytest.raises(InputError):
        q_of_k(c, 7)


@given(marginal_triples())
def test_q_of_k_matches_assembled_table(triple):
    n, x, y = triple
    c = canonicalize((x, n - x), (y, n - y), n)
    lo, hi = k_range(c)
    for k in range(lo, hi + 1):
        counts = ((k, c.x - k), (c.y - k, c.n + k - c.x - c.y))
        assert q_of_k(c, k) == sum(v * v for row in counts for v in row)


@given(marginal_triples())
def test_q_formula_is_symmetric_about_the_vertex(triple):
    n, x, y = triple
    c = canonicalize((x, n - x), (y, n - y), n)
    vertex4 = 2 * c.x + 2 * c.y - c.n
    if vertex4 % 2:
        return  # 2v is not an integer; integer pairs cannot straddle it exactly
    twice_v = vertex4 // 2
    for k in range(-2, c.x + 3):
        assert q_formula(c, k) == q_formula(c, twice_v - k)


# ------------------------------------------------------------------ #
# closed-form extrema
# ------------------------------------------------------------------ #


def test_maximize_interior_vertex():
    result = maximize(canonicalize((6, 4), (7, 3), 10))
    assert result.k_values == (6,)
    assert result.q_value == 46
    assert result.tables[0].counts == ((6, 0), (1, 3))


def test_maximize_balanced_first_clustering_ties():
    result = maximize(canonicalize((5, 5), (7, 3), 10))
    assert result.k_values == (2, 5)
    assert result.q_value == 38


def test_maximize_fully_balanced_ties_at_zero_and_half():
    result = maximize(canonicalize((5, 5), (5, 5), 10))
    assert result.k_values == (0, 5)
    assert result.q_value == 50
    assert {t.counts for t in result.tables} == {((0, 5), (5, 0)), ((5, 0), (0, 5))}


def test_minimize_vertex_left_of_interval():
    result = minimize(canonicalize((8, 2), (8, 2), 10))
    assert result.k_values == (6,)
    assert result.q_value == 44
    assert result.tables[0].counts == ((6, 2), (2, 0))


def test_minimize_integer_vertex():
    result = minimize(canonicalize((6, 4), (7, 3), 10))
    assert result.k_values == (4,)
    assert result.q_value == 30


def test_minimize_half_vertex_ties():
    result = minimize(canonicalize((6, 4), (6, 4), 10))
    assert result.k_values == (3, 4)
    assert result.q_value == 28


def test_minimize_branch_boundary_agrees_with_edge():
    # x+y = 3n/2 exactly: the interior branch applies and lands on the edge
    c = canonicalize((7, 3), (8, 2), 10)
    result = minimize(c)
    assert result.k_values == (5,)
    assert result.k_values[0] == k_range(c)[0]
    assert result.q_value == 38


def test_extremal_tables_maps_back_to_original_orientation():
    result = extremal_tables((4, 6), (3, 7), 10, Objective.MAXIMUM)
    assert result.q_value == 46
    (table,) = result.tables
    assert table.row_marginals == (4, 6)
    assert table.col_marginals == (3, 7)
    assert apply_transform(table.counts, canonicalize((4, 6), (3, 7), 10).transform) == (
        (6, 0),
        (1, 3),
    )


def test_extremal_tables_minimum_example():
    result = extremal_tables((6, 4), (7, 3), 10, Objective.MINIMUM)
    assert result.q_value == 30
    assert result.k_values == (4,)


@given(marginal_triples())
def test_extremal_tables_preserve_input_marginals(triple):
    n, x, y = triple
    for objective in Objective:
        result = extremal_tables((x, n - x), (y, n - y), n, objective)
        for t in result.tables:
            assert t.row_marginals == (x, n - x)
            assert t.col_marginals == (y, n - y)
            assert q_statistic(t) == result.q_value


@given(marginal_triples())
def test_extremal_q_is_orientation_invariant(triple):
    n, x, y = triple
    for objective in Objective:
        reference = extremal_tables((x, n - x), (y, n - y), n, objective).q_value
        assert extremal_tables((n - x, x), (y, n - y), n, objective).q_value == reference
        assert extremal_tables((x, n - x), (n - y, y), n, objective).q_value == reference
        assert extremal_tables((y, n - y), (x, n - x), n, objective).q_value == reference


@given(marginal_triples())
def test_tie_sizes_match_the_branch_conditions(triple):
    n, x, y = triple
    c = canonicalize((x, n - x), (y, n - y), n)
    assert (len(maximize(c).k_values) == 2) == (2 * c.x == n)
    vertex4 = 2 * c.x + 2 * c.y - c.n
    expects_tie = 2 * (c.x + c.y) <= 3 * c.n and vertex4 % 4 == 2
    assert (len(minimize(c).k_values) == 2) == expects_tie


@settings(deadline=None, max_examples=60)
@given(marginal_triples(max_n=16))
def test_extrema_match_independent_rejection_enumeration(triple):
    n, x, y = triple
    grids = naive_tables((x, n - x), (y, n - y))
    qs = [sum(v * v for row in g for v in row) for g in grids]
    best = maximize(canonicalize((x, n - x), (y, n - y), n))
    worst = minimize(canonicalize((x, n - x), (y, n - y), n))
    assert best.q_value == max(qs)
    assert worst.q_value == min(qs)
    assert {t.counts for t in best.tables} == {
        g for g, q in zip(grids, qs) if q == max(qs)
    }
    assert {t.counts for t in worst.tables} == {
        g for g, q in zip(grids, qs) if q == min(qs)
    }

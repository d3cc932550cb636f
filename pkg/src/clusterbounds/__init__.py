"""Pair-counting agreement between two clusterings of one data set,
with exact index values and exact agreement extrema at fixed cluster
sizes: a closed form for 2x2 tables and an enumeration oracle beyond."""

__version__ = "0.1.0"

from .errors import (
    BudgetExceededError,
    ClusterBoundsError,
    DegenerateClusteringError,
    InputError,
    UnsupportedIndexError,
)
from .extremal import (
    CanonicalForm,
    ExtremalResult,
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
)
from .indices import (
    IndexKind,
    IndexStatus,
    IndexValue,
    expected_index,
    index,
    max_adjusted_index,
    semimetric,
)
from .oracle import (
    DEFAULT_BUDGET,
    ConjectureReport,
    Counterexample,
    MarginalSpec,
    SpecScanResult,
    containment_predicate,
    enumerate_tables,
    extremize_q_bruteforce,
    partitions_into_three,
    scan_conjecture_3x3,
)
from .table import (
    MAX_N,
    ContingencyTable,
    Labeling,
    PairCounts,
    pair_counts,
    pair_counts_from_q,
    q_statistic,
    table_from_labels,
)

__all__ = [
    "BudgetExceededError",
    "CanonicalForm",
    "ClusterBoundsError",
    "ConjectureReport",
    "ContingencyTable",
    "Counterexample",
    "DEFAULT_BUDGET",
    "DegenerateClusteringError",
    "ExtremalResult",
    "IndexKind",
    "IndexStatus",
    "IndexValue",
    "InputError",
    "Labeling",
    "MAX_N",
    "MarginalSpec",
    "Objective",
    "PairCounts",
    "SpecScanResult",
    "Transform",
    "UnsupportedIndexError",
    "apply_transform",
    "canonicalize",
    "containment_predicate",
    "enumerate_tables",
    "expected_index",
    "extremal_tables",
    "extremize_q_bruteforce",
    "index",
    "invert_transform",
    "k_range",
    "max_adjusted_index",
    "maximize",
    "minimize",
    "pair_counts",
    "pair_counts_from_q",
    "partitions_into_three",
    "q_formula",
    "q_of_k",
    "q_statistic",
    "scan_conjecture_3x3",
    "semimetric",
    "table_from_labels",
]

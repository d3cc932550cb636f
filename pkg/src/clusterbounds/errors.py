"""Exception types shared across the package.

The CLI maps these onto its exit-code contract (2 for bad input, 3 for
unsupported operations, 4 for exhausted budgets), so raising the right
class matters more than the message text.
"""


class ClusterBoundsError(Exception):
    """Base class for every package-specific error."""


class InputError(ClusterBoundsError, ValueError):
    """Malformed or inconsistent user input."""


class DegenerateClusteringError(InputError):
    """A clustering with an empty cluster was supplied."""


class UnsupportedIndexError(ClusterBoundsError):
    """The requested operation is not available for this index kind."""


class BudgetExceededError(ClusterBoundsError):
    """An enumeration would emit more tables than its budget allows."""

    def __init__(self, budget: int):
        self.budget = budget
        super().__init__(f"table budget of {budget} exceeded")

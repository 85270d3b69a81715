"""Exception hierarchy shared across the package.

The CLI maps these onto stable exit codes: InputError -> 2,
InvariantError -> 3, BudgetError -> 4.
"""


class InputError(ValueError):
    """Malformed or infeasible external input (files, formulas, parameters)."""


class InvariantError(ValueError):
    """A data invariant or operation precondition was violated."""


class BudgetError(RuntimeError):
    """A search was refused because its estimated cost exceeds the budget."""

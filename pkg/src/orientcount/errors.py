"""Exception types shared across the package.

The CLI maps PreconditionError to exit code 2 and BudgetRefusal to exit
code 3.
"""


class PreconditionError(ValueError):
    """An operation was called with inputs violating its contract."""


class BudgetRefusal(RuntimeError):
    """An exact computation was refused because it exceeds a stated budget."""

"""Exception types shared across the package."""


class InputError(ValueError):
    """Malformed or inconsistent input (bad graph, mismatched vertex sets, ...)."""


class BudgetExceeded(RuntimeError):
    """A size guard refused to run an exponential computation."""


class InvariantViolation(RuntimeError):
    """An internal cross-check failed. Always indicates a bug."""

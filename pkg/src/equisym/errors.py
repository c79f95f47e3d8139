"""Shared exception types."""


class BudgetExceededError(RuntimeError):
    """Raised when a brute-force search would exceed its configured budget."""


class InvariantError(RuntimeError):
    """Raised when a computed quantity violates an internal consistency check."""

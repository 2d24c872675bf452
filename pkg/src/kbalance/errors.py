"""Exception types shared across modules (and the compiled kernels)."""


class KBalanceError(Exception):
    """Base class for package errors."""


class CycleCapExceeded(KBalanceError):
    """Raised when cycle enumeration exceeds the configured cap."""


class SearchBudgetExceeded(KBalanceError):
    """Raised when a backtracking search exceeds its node budget."""

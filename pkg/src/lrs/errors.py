"""Exception types shared across the package."""


class DomainError(ValueError):
    """Bad domain spec or a value that does not belong to the domain."""


class DomainMismatchError(DomainError):
    """Operands come from different domains."""


class UnsupportedOperationError(ArithmeticError):
    """Operation undefined in this domain (e.g. inverting 0 or an integer)."""


class RejectedInputError(ValueError):
    """An argument violates a documented precondition."""


class BudgetExceededError(ValueError):
    """Requested enumeration or search is larger than the configured budget."""


class InvariantError(AssertionError):
    """A proven identity failed to hold; indicates a bug, never bad input."""

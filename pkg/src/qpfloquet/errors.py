"""Exception types shared across the package."""


class InvalidInputError(ValueError):
    """Raised when arguments violate an operation's preconditions."""


class CapacityError(RuntimeError):
    """Raised when a request exceeds a documented size limit."""

"""Exception types raised by the toolkit."""


class DomainError(ValueError):
    """An argument lies outside the domain of the operation."""


class InvalidMeasureError(ValueError):
    """A Herglotz measure is empty or has a non-positive/non-finite atom."""


class UsageError(ValueError):
    """Bad configuration or unknown suite name."""

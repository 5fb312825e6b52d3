"""Exception types shared across the package."""


class QuandleBoundsError(Exception):
    """Base class for errors raised by this package."""


class BraidSyntaxError(QuandleBoundsError, ValueError):
    """Malformed braid or block text. ``position`` is a 0-based column."""

    def __init__(self, message, position=None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


class BudgetExceeded(QuandleBoundsError):
    """An enumeration would visit more than the permitted number of items."""

    def __init__(self, needed, cap, what="colorings"):
        self.needed = needed
        self.cap = cap
        super().__init__(f"enumerating {needed} {what} exceeds the cap of {cap}")


class HypothesisNotMet(QuandleBoundsError):
    """A computation was asked for outside the range where its formula holds."""


class PreconditionError(QuandleBoundsError, ValueError):
    """Input violates a documented precondition (e.g. a non-fixed coloring)."""


class ConsistencyError(QuandleBoundsError, AssertionError):
    """An internal identity that should always hold did not."""

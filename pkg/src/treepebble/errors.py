"""Exception types shared across the package."""


class PebblingError(Exception):
    """Base class for every domain error raised by this package."""


class TreeFormatError(PebblingError):
    """Malformed input document, or edges that do not form a tree."""


class UnknownVertexError(PebblingError):
    """A vertex name that does not belong to the tree at hand."""


class OverflowLimitError(PebblingError):
    """A computed value left the signed 64-bit range (we refuse to wrap)."""


class BudgetExceededError(PebblingError):
    """An oracle search or enumeration exceeded its configured budget."""


class IllegalMoveError(PebblingError):
    """A pebbling move that cannot be applied at its position in a sequence."""

    def __init__(self, index: int, reason: str):
        super().__init__(f"illegal move at index {index}: {reason}")
        self.index = index
        self.reason = reason


class NotSolvableError(PebblingError):
    """A move-sequence witness was requested for a root that cannot be met."""

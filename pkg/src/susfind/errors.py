"""Exception types raised by susfind."""


class SusError(Exception):
    """Base class for all susfind errors."""


class EmptyTextError(SusError, ValueError):
    """An index was requested for a zero-length text."""


class TextTooLargeError(SusError, ValueError):
    """The text does not fit the 32-bit index arrays."""


class PositionError(SusError, IndexError):
    """A 1-based text position lies outside ``1..n``."""


class WalkOrderError(SusError, RuntimeError):
    """A walker step was requested out of sequence."""


class IndexFormatError(SusError, ValueError):
    """A serialized index file is malformed or does not match its text."""

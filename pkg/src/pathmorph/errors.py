"""Exception hierarchy shared by every pathmorph module."""


class PathError(ValueError):
    """Base class for all errors raised by pathmorph."""


class InvalidLength(PathError):
    """A step sequence is empty or has an odd number of steps."""


class NonZeroStart(PathError):
    """A position sequence does not start at height 0."""


class BadStep(PathError):
    """Two consecutive positions differ by something other than 1."""

    def __init__(self, index, message=None):
        self.index = index
        super().__init__(message or f"step into index {index} is not +1 or -1")


class OddLength(PathError):
    """A position sequence describes an odd number of steps."""


class PathSyntaxError(PathError):
    """Text could not be read as a tuple of integers."""


class NotInDomain(PathError):
    """A map was applied to a path outside its domain family."""


class NTooSmall(PathError):
    """The half-length is too small for the requested map."""


class LimitExceeded(PathError):
    """An exhaustive sweep was requested above the configured limit."""


class EmptyFamily(PathError):
    """A family has no members at the requested size."""


class LengthMismatch(PathError):
    """Two paths that must be drawn together have different lengths."""

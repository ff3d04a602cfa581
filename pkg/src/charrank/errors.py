"""Exception types shared across the package."""


class CharrankError(Exception):
    """Base class for all errors raised by this package."""


class CapExceeded(CharrankError):
    """An explicit enumeration would exceed the configured size cap."""


class PreconditionViolation(CharrankError):
    """An argument violates a documented precondition."""


class InvalidDimensions(CharrankError):
    """Grassmannian indices out of range (need 1 <= n and 0 <= k <= n)."""


class NotGapless(CharrankError):
    """The Grassmannian form of the bound needs a gapless degree set."""


class DegreeOutOfRange(CharrankError):
    """The requested cohomology degree is outside the range the bound covers."""

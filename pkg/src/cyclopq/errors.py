"""Exception types shared across the package."""


class CyclopqError(Exception):
    """Base class for every error raised by cyclopq."""


class ValidationError(CyclopqError, ValueError):
    """Bad input: non-prime, non-coprime, out of range, zero divisor."""


class ArithmeticOverflowError(CyclopqError, OverflowError):
    """A coefficient left the signed 64-bit range or an exponent the unsigned one."""


class InexactDivisionError(CyclopqError, ArithmeticError):
    """Polynomial division left a nonzero remainder."""


class CapacityError(CyclopqError):
    """Requested output exceeds the configured degree cap."""


class InvariantViolation(CyclopqError, AssertionError):
    """An internal consistency check failed. Indicates a bug, not bad input."""

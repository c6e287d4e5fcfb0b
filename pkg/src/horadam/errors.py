"""Exception types raised by the evaluators and identity builders."""


class HoradamError(Exception):
    """Base class for every error this package raises on purpose."""


class DomainError(HoradamError, ValueError):
    """An index or stride lies outside the range an operation is defined on."""


class DegenerateDiscriminant(DomainError):
    """p**2 + 4*q == 0, so the characteristic roots coincide and Binet does not apply."""


class IndexNotOnStride(DomainError):
    """A stride strategy was asked for an index that is not m*i with m >= 2."""


class MismatchedDiscriminant(HoradamError, ValueError):
    """Two quadratic-ring elements with different discriminants were combined."""


class InternalNonInteger(HoradamError, AssertionError):
    """Binet produced a non-integer. Always a bug in the ring arithmetic."""


class UnknownPreset(HoradamError, LookupError):
    """The preset name is not in the catalog."""

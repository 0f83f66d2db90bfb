class DomainError(ValueError):
    """Raised when inputs violate the mathematical preconditions of an operation."""


class IrrationalSupportError(DomainError):
    """A divisor or base locus would need places that are not F_p-rational."""


class PrecisionError(DomainError):
    """A series was asked for a coefficient beyond its known precision."""

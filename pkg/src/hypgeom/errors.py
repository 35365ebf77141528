"""Exception hierarchy shared by all hypgeom modules."""


class GeometryError(Exception):
    """Base class for every error raised by this package."""


class DomainError(GeometryError, ValueError):
    """An argument violates the mathematical domain of an operation."""


class OutOfRangeError(GeometryError, OverflowError):
    """An exponential argument exceeds the double-precision safe range.

    Raised instead of silently returning inf so that identity checks
    stay meaningful.  The guard triggers for arguments above 700*k to
    any exp(x/k).
    """


class ConstructionError(GeometryError):
    """A construction step could not be resolved (empty intersection,
    unknown name, name collision, malformed script)."""


class InadmissibleError(DomainError):
    """A quadrature ratio fails the constructibility condition."""

    def __init__(self, message: str, certificate: dict | None = None):
        super().__init__(message)
        self.certificate = certificate or {}


class UnplannedError(GeometryError):
    """No polygon with side count below the search bound solves the
    quadrature equation for an admissible ratio."""

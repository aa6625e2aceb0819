"""Exception types shared across the package."""


class MapError(ValueError):
    """Base class for all domain and parameter failures raised here."""


class DomainError(MapError):
    """Input lies outside the valid domain of an operation or projection."""


class ParameterError(MapError):
    """Construction or call parameters are invalid."""


class InconsistentTriangleError(MapError):
    """Side lengths that admit no spherical triangle."""


class AmbiguousGeodesicError(MapError):
    """Antipodal endpoints: the connecting minor arc is not unique."""


class ConvergenceError(MapError):
    """An iterative search exhausted its iteration budget.

    The best iterate found so far is attached as ``best``.
    """

    def __init__(self, message, best=None):
        super().__init__(message)
        self.best = best

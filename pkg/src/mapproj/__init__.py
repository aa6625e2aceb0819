"""Map projections of the sphere, their distortion, and conic parallel design."""

from .errors import (
    AmbiguousGeodesicError,
    ConvergenceError,
    DomainError,
    InconsistentTriangleError,
    MapError,
    ParameterError,
)
from .geo import (
    GeoCoord,
    GeoRegion,
    NORTH_POLE,
    SOUTH_POLE,
    from_unit_vector,
    great_circle_distance,
    sample_great_circle,
    spherical_angle_from_sides,
    to_unit_vector,
    wrap_longitude,
)
from .projections import (
    CentralOnTangentPlane,
    ConicConstants,
    EquidistantConic,
    Equirectangular,
    FAMILIES,
    Gnomonic,
    LambertAzimuthalEqualArea,
    LambertConformalConic,
    LambertCylindricalEqualArea,
    Mercator,
    Orthographic,
    PlanePoint,
    Projection,
    Stereographic,
    UnknownFamilyError,
    Werner,
    conic_constants,
    parse_projection,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"

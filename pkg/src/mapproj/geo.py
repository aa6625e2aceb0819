"""Spherical geometry on the unit sphere.

Coordinates, Cartesian embedding, great-circle distance and sampling, and the
side-side-side angle formula for spherical triangles. All angles are radians
internally; degrees appear only at I/O boundaries (``from_degrees`` /
``lat_deg`` style helpers). The sphere has unit radius throughout; a physical
radius is a pure output scale applied at rendering time.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import (
    AmbiguousGeodesicError,
    DomainError,
    InconsistentTriangleError,
    ParameterError,
)

HALF_PI = math.pi / 2.0
TWO_PI = 2.0 * math.pi

# arccos arguments this close to [-1, 1] are treated as rounding of a valid
# degenerate configuration rather than an inconsistent one
COS_CLAMP_TOL = 1e-9

# from_unit_vector rejects vectors whose norm is further than this from 1
UNIT_NORM_TOL = 1e-9


def wrap_longitude(lon: float) -> float:
    """Reduce a longitude to the canonical interval (-pi, pi]."""
    lon = math.fmod(lon, TWO_PI)
    if lon <= -math.pi:
        lon += TWO_PI
    elif lon > math.pi:
        lon -= TWO_PI
    return lon


@dataclass(frozen=True)
class GeoCoord:
    """Point on the unit sphere.

    ``lat`` is geographic latitude in [-pi/2, pi/2] (positive north), ``lon``
    longitude in (-pi, pi] (positive east of the reference meridian). The
    constructor normalizes the longitude and canonicalizes it to 0 at the
    poles, where the meridian is undefined.
    """

    lat: float
    lon: float = 0.0

    def __post_init__(self):
        lat = float(self.lat)
        lon = float(self.lon)
        if not (math.isfinite(lat) and math.isfinite(lon)):
            raise DomainError("coordinates must be finite")
        if abs(lat) > HALF_PI + 1e-12:
            raise DomainError(
                f"latitude {math.degrees(lat):.6f}° outside [-90°, 90°]"
            )
        lat = max(-HALF_PI, min(HALF_PI, lat))
        lon = 0.0 if abs(lat) == HALF_PI else wrap_longitude(lon)
        object.__setattr__(self, "lat", lat)
        object.__setattr__(self, "lon", lon)

    @classmethod
    def from_degrees(cls, lat_deg: float, lon_deg: float = 0.0) -> "GeoCoord":
        return cls(math.radians(lat_deg), math.radians(lon_deg))

    @property
    def lat_deg(self) -> float:
        return math.degrees(self.lat)

    @property
    def lon_deg(self) -> float:
        return math.degrees(self.lon)

    def describe(self) -> str:
        """Degree-formatted rendering for error messages and reports."""
        return f"(lat {self.lat_deg:.6f}°, lon {self.lon_deg:.6f}°)"


NORTH_POLE = GeoCoord(HALF_PI, 0.0)
SOUTH_POLE = GeoCoord(-HALF_PI, 0.0)


@dataclass(frozen=True)
class GeoRegion:
    """Latitude/longitude rectangle; longitude interval must not wrap."""

    lat_lo: float
    lat_hi: float
    lon_lo: float
    lon_hi: float

    def __post_init__(self):
        if not (-HALF_PI <= self.lat_lo < self.lat_hi <= HALF_PI):
            raise ParameterError("latitude bounds must satisfy -90 <= lo < hi <= 90")
        if not self.lon_lo < self.lon_hi:
            raise ParameterError("longitude bounds must satisfy lo < hi")
        if self.lon_hi - self.lon_lo > TWO_PI + 1e-12:
            raise ParameterError("longitude span exceeds 360°")

    @classmethod
    def from_degrees(cls, lat_lo, lat_hi, lon_lo, lon_hi) -> "GeoRegion":
        return cls(*(math.radians(v) for v in (lat_lo, lat_hi, lon_lo, lon_hi)))


def to_unit_vector(c: GeoCoord) -> np.ndarray:
    """Cartesian embedding: x toward (0,0), y toward (0,90E), z toward the north pole."""
    cos_lat = math.cos(c.lat)
    return np.array(
        [cos_lat * math.cos(c.lon), cos_lat * math.sin(c.lon), math.sin(c.lat)]
    )


def from_unit_vector(v) -> GeoCoord:
    """Inverse of :func:`to_unit_vector`; rejects clearly non-unit input."""
    v = np.asarray(v, dtype=float)
    norm = float(np.linalg.norm(v))
    if abs(norm - 1.0) > UNIT_NORM_TOL:
        raise DomainError(f"not a unit vector: |v| = {norm:.12g}")
    x, y, z = (v / norm).tolist()
    lat = math.asin(max(-1.0, min(1.0, z)))
    lon = math.atan2(y, x) if (x != 0.0 or y != 0.0) else 0.0
    return GeoCoord(lat, lon)


def great_circle_distance(a: GeoCoord, b: GeoCoord) -> float:
    """Arc length between two points, in [0, pi].

    Uses the cross/dot atan2 form, which stays accurate for near-coincident
    and near-antipodal pairs where plain arccos loses digits.
    """
    u = to_unit_vector(a)
    v = to_unit_vector(b)
    return math.atan2(float(np.linalg.norm(np.cross(u, v))), float(np.dot(u, v)))


def spherical_angle_from_sides(ab: float, ac: float, bc: float) -> float:
    """Vertex angle at A of a spherical triangle with side arcs ab, ac, bc.

    Sides must lie strictly in (0, pi). cos A values within COS_CLAMP_TOL of
    [-1, 1] are clamped (valid degenerate triangles); anything further out is
    rejected as inconsistent.
    """
    for name, side in (("ab", ab), ("ac", ac), ("bc", bc)):
        if not 0.0 < side < math.pi:
            raise DomainError(
                f"side {name} = {math.degrees(side):.6f}° not in (0°, 180°)"
            )
    cos_a = (math.cos(bc) - math.cos(ab) * math.cos(ac)) / (
        math.sin(ab) * math.sin(ac)
    )
    if abs(cos_a) > 1.0 + COS_CLAMP_TOL:
        raise InconsistentTriangleError(
            f"sides admit no spherical triangle (cos A = {cos_a:.9g})"
        )
    return math.acos(max(-1.0, min(1.0, cos_a)))


def sample_great_circle(a: GeoCoord, b: GeoCoord, n: int) -> list[GeoCoord]:
    """n points from a to b, equally spaced in arc length along the minor arc.

    Spherical linear interpolation of the unit vectors; endpoints are returned
    exactly. Antipodal endpoints are rejected (no unique minor arc).
    """
    if n < 2:
        raise ParameterError(f"need at least 2 samples, got {n}")
    u = to_unit_vector(a)
    v = to_unit_vector(b)
    omega = great_circle_distance(a, b)
    if omega < 1e-15:
        raise ParameterError("endpoints coincide; the arc is degenerate")
    if omega > math.pi - 1e-9:
        raise AmbiguousGeodesicError(
            f"endpoints {a.describe()} and {b.describe()} are antipodal"
        )
    sin_omega = math.sin(omega)
    points = [a]
    for i in range(1, n - 1):
        t = i / (n - 1)
        w = (math.sin((1.0 - t) * omega) * u + math.sin(t * omega) * v) / sin_omega
        points.append(from_unit_vector(w / np.linalg.norm(w)))
    points.append(b)
    return points

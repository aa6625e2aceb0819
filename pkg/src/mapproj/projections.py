"""Sphere-to-plane projection families: forward and inverse maps.

Eleven families are implemented, each a frozen dataclass with ``forward`` and
``inverse`` methods:

* cylindrical-like: Equirectangular, Mercator, LambertCylindricalEqualArea
* azimuthal: Stereographic, Gnomonic, CentralOnTangentPlane, Orthographic,
  LambertAzimuthalEqualArea
* conic: EquidistantConic (the Delisle layout), LambertConformalConic
* cordiform: Werner

Plane conventions: x east, y north on the central meridian; map units are
unit-sphere radians. Conic apexes sit above the map (positive y). Azimuthal
families take an arbitrary ``center`` (the tangent point); their plane axes
follow east/north at the center, except at the poles, where every direction
is north/south and the axes instead point toward longitudes 0 and 90E.
Oblique aspects therefore need no per-family formulas: the radial profile is
applied to the arc distance from the center.

All parameters are radians; :func:`parse_projection` builds a projection from
a degree-based plain-text spec string (grammar in its docstring).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from typing import ClassVar

import numpy as np

from .errors import DomainError, MapError, ParameterError
from .geo import (
    HALF_PI,
    NORTH_POLE,
    SOUTH_POLE,
    GeoCoord,
    from_unit_vector,
    to_unit_vector,
    wrap_longitude,
)

# conic radii at or below this are treated as beyond the apex
RHO_MIN = 1e-9


class UnknownFamilyError(ParameterError):
    """Projection family name not recognized; message lists valid names."""


@dataclass(frozen=True)
class PlanePoint:
    """Euclidean image coordinates, in unit-sphere radians of map length."""

    x: float
    y: float

    def __iter__(self):
        yield self.x
        yield self.y


@dataclass(frozen=True)
class Projection:
    """Base interface: a forward map into the plane and its inverse."""

    family: ClassVar[str] = ""

    def forward(self, c: GeoCoord) -> PlanePoint:
        raise NotImplementedError

    def inverse(self, p: PlanePoint) -> GeoCoord:
        raise NotImplementedError

    @property
    def cut_longitude(self) -> float | None:
        """Longitude of the antimeridian tear, or None for azimuthal families."""
        return None


def _out_of_domain(proj: Projection, c: GeoCoord, why: str) -> DomainError:
    return DomainError(f"{c.describe()} outside {proj.family} domain: {why}")


# ---------------------------------------------------------------------------
# azimuthal families


@dataclass(frozen=True)
class _Azimuthal(Projection):
    """Shared machinery: radial profile r(c) applied to the arc distance c
    from the tangent point, direction taken from the local east/north frame."""

    center: GeoCoord = NORTH_POLE

    def _radial(self, c: float) -> float:
        raise NotImplementedError

    def _radial_inverse(self, r: float) -> float:
        raise NotImplementedError

    def _check_distance(self, c: float, coord: GeoCoord) -> None:
        raise NotImplementedError

    @cached_property
    def _frame(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        cv = to_unit_vector(self.center)
        if abs(self.center.lat) >= HALF_PI:
            e1 = np.array([1.0, 0.0, 0.0])
            e2 = np.array([0.0, 1.0, 0.0])
        else:
            sin_lat, cos_lat = math.sin(self.center.lat), math.cos(self.center.lat)
            sin_lon, cos_lon = math.sin(self.center.lon), math.cos(self.center.lon)
            e1 = np.array([-sin_lon, cos_lon, 0.0])
            e2 = np.array([-sin_lat * cos_lon, -sin_lat * sin_lon, cos_lat])
        return cv, e1, e2

    def forward(self, c: GeoCoord) -> PlanePoint:
        cv, e1, e2 = self._frame
        p = to_unit_vector(c)
        dot = float(np.dot(p, cv))
        tangent = p - dot * cv
        tnorm = float(np.linalg.norm(tangent))
        dist = math.atan2(tnorm, dot)
        self._check_distance(dist, c)
        if tnorm < 1e-15:
            return PlanePoint(0.0, 0.0)
        r = self._radial(dist) / tnorm
        return PlanePoint(r * float(np.dot(tangent, e1)), r * float(np.dot(tangent, e2)))

    def inverse(self, p: PlanePoint) -> GeoCoord:
        cv, e1, e2 = self._frame
        r = math.hypot(p.x, p.y)
        dist = self._radial_inverse(r)
        if r < 1e-15:
            return GeoCoord(self.center.lat, self.center.lon)
        direction = (p.x * e1 + p.y * e2) / r
        w = math.cos(dist) * cv + math.sin(dist) * direction
        return from_unit_vector(w / np.linalg.norm(w))


@dataclass(frozen=True)
class Stereographic(_Azimuthal):
    """Projection from the antipode of ``center`` onto the tangent plane at
    ``center``; conformal, and sends circles on the sphere to plane circles
    or lines. Default aspect: tangent at the south pole, rays from the north
    pole (which is the one excluded point)."""

    center: GeoCoord = SOUTH_POLE
    family: ClassVar[str] = "stereographic"

    def _radial(self, c: float) -> float:
        return 2.0 * math.tan(0.5 * c)

    def _radial_inverse(self, r: float) -> float:
        return 2.0 * math.atan(0.5 * r)

    def _check_distance(self, c: float, coord: GeoCoord) -> None:
        if c >= math.pi - 1e-12:
            raise _out_of_domain(self, coord, "the projection source maps to infinity")


@dataclass(frozen=True)
class Gnomonic(_Azimuthal):
    """Projection from the sphere center onto the tangent plane at ``center``;
    valid strictly inside the open hemisphere around the tangent point, and
    sends great-circle arcs to straight lines. Default tangent point: the
    south pole."""

    center: GeoCoord = SOUTH_POLE
    family: ClassVar[str] = "gnomonic"

    def _radial(self, c: float) -> float:
        return math.tan(c)

    def _radial_inverse(self, r: float) -> float:
        return math.atan(r)

    def _check_distance(self, c: float, coord: GeoCoord) -> None:
        if c >= HALF_PI - 1e-12:
            raise _out_of_domain(self, coord, "on or beyond the horizon of the tangent point")


@dataclass(frozen=True)
class CentralOnTangentPlane(Gnomonic):
    """Central projection onto a configurable tangent plane.

    Mathematically identical to :class:`Gnomonic`; kept as its own family
    because the two names carry distinct historical usage (celestial charts
    vs terrestrial maps). Default tangent point: the north pole.
    """

    center: GeoCoord = NORTH_POLE
    family: ClassVar[str] = "central"


@dataclass(frozen=True)
class Orthographic(_Azimuthal):
    """Parallel projection (center of projection at infinity) onto the plane
    through the sphere center perpendicular to ``center``; valid on the
    closed near hemisphere."""

    center: GeoCoord = NORTH_POLE
    family: ClassVar[str] = "orthographic"

    def _radial(self, c: float) -> float:
        return math.sin(c)

    def _radial_inverse(self, r: float) -> float:
        if r > 1.0 + 1e-9:
            raise DomainError(f"no preimage: radius {r:.9g} beyond the orthographic limb")
        return math.asin(min(1.0, r))

    def _check_distance(self, c: float, coord: GeoCoord) -> None:
        if c > HALF_PI + 1e-12:
            raise _out_of_domain(self, coord, "on the hidden hemisphere")


@dataclass(frozen=True)
class LambertAzimuthalEqualArea(_Azimuthal):
    """Area-preserving azimuthal map; covers the whole sphere except the
    antipode of the center."""

    center: GeoCoord = NORTH_POLE
    family: ClassVar[str] = "lambert_azimuthal_equal_area"

    def _radial(self, c: float) -> float:
        return 2.0 * math.sin(0.5 * c)

    def _radial_inverse(self, r: float) -> float:
        if r > 2.0 + 1e-9:
            raise DomainError(f"no preimage: radius {r:.9g} beyond the equal-area disc")
        return 2.0 * math.asin(min(1.0, 0.5 * r))

    def _check_distance(self, c: float, coord: GeoCoord) -> None:
        if c >= math.pi - 1e-12:
            raise _out_of_domain(self, coord, "antipode of the center is excluded")


# ---------------------------------------------------------------------------
# cylindrical-like families


@dataclass(frozen=True)
class Equirectangular(Projection):
    """Straight, evenly spaced meridians and parallels; true scale along all
    meridians and along the standard parallel phi0."""

    phi0: float = 0.0
    lon0: float = 0.0
    family: ClassVar[str] = "equirectangular"

    def __post_init__(self):
        if abs(self.phi0) >= HALF_PI:
            raise ParameterError("standard parallel must lie strictly between the poles")
        object.__setattr__(self, "lon0", wrap_longitude(self.lon0))

    @property
    def cut_longitude(self) -> float:
        return wrap_longitude(self.lon0 + math.pi)

    def forward(self, c: GeoCoord) -> PlanePoint:
        return PlanePoint(wrap_longitude(c.lon - self.lon0) * math.cos(self.phi0), c.lat)

    def inverse(self, p: PlanePoint) -> GeoCoord:
        if abs(p.y) > HALF_PI + 1e-12:
            raise DomainError(f"no preimage: |y| = {abs(p.y):.9g} beyond the pole line")
        dlam = p.x / math.cos(self.phi0)
        if abs(dlam) > math.pi + 1e-9:
            raise DomainError(f"no preimage: x = {p.x:.9g} beyond the map width")
        return GeoCoord(max(-HALF_PI, min(HALF_PI, p.y)), self.lon0 + dlam)


@dataclass(frozen=True)
class Mercator(Projection):
    """Conformal cylindrical map; loxodromes plot as straight lines. The
    poles are at infinite y, so a latitude cutoff bounds the domain."""

    lon0: float = 0.0
    cutoff: float = math.radians(85.0)
    family: ClassVar[str] = "mercator"

    def __post_init__(self):
        if not 0.0 < self.cutoff < HALF_PI:
            raise ParameterError(
                f"cutoff {math.degrees(self.cutoff):.4f}° must lie in (0°, 90°)"
            )
        object.__setattr__(self, "lon0", wrap_longitude(self.lon0))

    @property
    def cut_longitude(self) -> float:
        return wrap_longitude(self.lon0 + math.pi)

    def forward(self, c: GeoCoord) -> PlanePoint:
        if abs(c.lat) > self.cutoff:
            raise _out_of_domain(
                self, c, f"beyond the ±{math.degrees(self.cutoff):.4f}° cutoff"
            )
        # asinh(tan(lat)) == ln tan(pi/4 + lat/2), but exactly odd in floats
        return PlanePoint(wrap_longitude(c.lon - self.lon0), math.asinh(math.tan(c.lat)))

    def inverse(self, p: PlanePoint) -> GeoCoord:
        if abs(p.x) > math.pi + 1e-9:
            raise DomainError(f"no preimage: x = {p.x:.9g} beyond the map width")
        lat = math.atan(math.sinh(p.y))
        if abs(lat) > self.cutoff + 1e-12:
            raise DomainError(f"no preimage: y = {p.y:.9g} beyond the latitude cutoff")
        return GeoCoord(lat, self.lon0 + p.x)


@dataclass(frozen=True)
class LambertCylindricalEqualArea(Projection):
    """Area-preserving cylindrical map, true scale on parallel phi0."""

    phi0: float = 0.0
    lon0: float = 0.0
    family: ClassVar[str] = "lambert_cylindrical_equal_area"

    def __post_init__(self):
        if abs(self.phi0) >= HALF_PI:
            raise ParameterError("standard parallel must lie strictly between the poles")
        object.__setattr__(self, "lon0", wrap_longitude(self.lon0))

    @property
    def cut_longitude(self) -> float:
        return wrap_longitude(self.lon0 + math.pi)

    def forward(self, c: GeoCoord) -> PlanePoint:
        cos0 = math.cos(self.phi0)
        return PlanePoint(wrap_longitude(c.lon - self.lon0) * cos0, math.sin(c.lat) / cos0)

    def inverse(self, p: PlanePoint) -> GeoCoord:
        cos0 = math.cos(self.phi0)
        sin_lat = p.y * cos0
        if abs(sin_lat) > 1.0 + 1e-9:
            raise DomainError(f"no preimage: y = {p.y:.9g} beyond the pole line")
        dlam = p.x / cos0
        if abs(dlam) > math.pi + 1e-9:
            raise DomainError(f"no preimage: x = {p.x:.9g} beyond the map width")
        return GeoCoord(math.asin(max(-1.0, min(1.0, sin_lat))), self.lon0 + dlam)


# ---------------------------------------------------------------------------
# conic families


@dataclass(frozen=True)
class ConicConstants:
    """Cone constant n, radius of the reference (inner) parallel, and the
    distance of the meridian convergence point beyond the pole, all for the
    northern-aspect equidistant conic."""

    n: float
    rho_ref: float
    apex_overshoot: float


def conic_constants(phi_a: float, phi_b: float) -> ConicConstants:
    """Constants for the equidistant conic true at parallels phi_a < phi_b.

    n is fixed by requiring the map ratio of longitude degrees to latitude
    degrees to be exact on both standard parallels while meridian degrees
    keep unit length.
    """
    if not 0.0 < phi_a < phi_b < HALF_PI:
        raise ParameterError(
            "standard parallels must satisfy 0 < phi_a < phi_b < 90° "
            f"(got {math.degrees(phi_a):.4f}°, {math.degrees(phi_b):.4f}°)"
        )
    n = (math.cos(phi_a) - math.cos(phi_b)) / (phi_b - phi_a)
    rho_ref = math.cos(phi_a) / n
    return ConicConstants(n=n, rho_ref=rho_ref, apex_overshoot=rho_ref - (HALF_PI - phi_a))


def _validate_conic_parallels(phi_a: float, phi_b: float) -> bool:
    """Shared conic parallel checks; returns True for the southern aspect."""
    if phi_a == 0.0 or phi_b == 0.0 or abs(phi_a) >= HALF_PI or abs(phi_b) >= HALF_PI:
        raise ParameterError("standard parallels must lie strictly between equator and pole")
    if (phi_a > 0.0) != (phi_b > 0.0):
        raise ParameterError("standard parallels must lie in the same hemisphere")
    south = phi_a < 0.0
    inner, outer = (abs(phi_a), abs(phi_b))
    if not inner < outer:
        raise ParameterError(
            "standard parallels out of order: |phi_a| must be the one nearer the equator"
        )
    return south


@dataclass(frozen=True)
class EquidistantConic(Projection):
    """Two-standard-parallel conic with exactly true meridian scale.

    Meridians are straight rays through the apex, parallels concentric
    circular arcs spaced by their true latitude difference; the longitude
    degree / latitude degree ratio is exact on both standard parallels. The
    apex where the meridian images meet lies beyond the pole. Southern-aspect
    instances (negative parallels) mirror the northern formulas in y.

    ``cutoff``, when set, bounds the poleward latitude the map accepts;
    otherwise the domain runs to where the parallel radius reaches zero.
    """

    phi_a: float
    phi_b: float
    lon0: float = 0.0
    cutoff: float | None = None
    family: ClassVar[str] = "equidistant_conic"

    def __post_init__(self):
        _validate_conic_parallels(self.phi_a, self.phi_b)
        object.__setattr__(self, "lon0", wrap_longitude(self.lon0))
        if self.cutoff is not None:
            k = self.constants
            apex_lat = k.rho_ref + abs(self.phi_a) - RHO_MIN
            if not abs(self.cutoff) < min(HALF_PI + 1e-12, apex_lat):
                raise ParameterError("cutoff outside the conic's valid domain")

    @cached_property
    def _south(self) -> bool:
        return self.phi_a < 0.0

    @cached_property
    def constants(self) -> ConicConstants:
        return conic_constants(abs(self.phi_a), abs(self.phi_b))

    @property
    def cut_longitude(self) -> float:
        return wrap_longitude(self.lon0 + math.pi)

    def forward(self, c: GeoCoord) -> PlanePoint:
        k = self.constants
        lat = -c.lat if self._south else c.lat
        if self.cutoff is not None and lat > abs(self.cutoff):
            raise _out_of_domain(
                self, c, f"beyond the {math.degrees(self.cutoff):.4f}° cutoff"
            )
        rho = k.rho_ref + abs(self.phi_a) - lat
        if rho <= RHO_MIN:
            raise _out_of_domain(self, c, "at or beyond the cone apex")
        theta = k.n * wrap_longitude(c.lon - self.lon0)
        x = rho * math.sin(theta)
        y = k.rho_ref - rho * math.cos(theta)
        return PlanePoint(x, -y if self._south else y)

    def inverse(self, p: PlanePoint) -> GeoCoord:
        k = self.constants
        y = -p.y if self._south else p.y
        dy = k.rho_ref - y
        rho = math.hypot(p.x, dy)
        if rho <= RHO_MIN:
            raise DomainError("no preimage: point at or beyond the cone apex")
        theta = math.atan2(p.x, dy)
        dlam = theta / k.n
        if abs(dlam) > math.pi + 1e-9:
            raise DomainError(f"no preimage: map angle {theta:.9g} outside the cone wedge")
        lat = k.rho_ref + abs(self.phi_a) - rho
        if lat < -HALF_PI - 1e-9:
            raise DomainError("no preimage: radius beyond the far pole")
        if self.cutoff is not None and lat > abs(self.cutoff) + 1e-12:
            raise DomainError("no preimage: beyond the latitude cutoff")
        lat = max(-HALF_PI, min(HALF_PI, lat))
        return GeoCoord(-lat if self._south else lat, self.lon0 + dlam)


@dataclass(frozen=True)
class LambertConformalConic(Projection):
    """Conformal conic with true scale on both standard parallels; poles are
    excluded (the near pole is the apex limit, the far one is at infinity).
    Southern aspects mirror the northern formulas in y."""

    phi_a: float
    phi_b: float
    lon0: float = 0.0
    family: ClassVar[str] = "lambert_conformal_conic"

    def __post_init__(self):
        _validate_conic_parallels(self.phi_a, self.phi_b)
        object.__setattr__(self, "lon0", wrap_longitude(self.lon0))

    @cached_property
    def _south(self) -> bool:
        return self.phi_a < 0.0

    @cached_property
    def _nF(self) -> tuple[float, float, float]:
        pa, pb = abs(self.phi_a), abs(self.phi_b)
        ta = math.tan(0.25 * math.pi + 0.5 * pa)
        tb = math.tan(0.25 * math.pi + 0.5 * pb)
        n = math.log(math.cos(pa) / math.cos(pb)) / math.log(tb / ta)
        f = math.cos(pa) * ta**n / n
        rho_ref = f * ta**-n
        return n, f, rho_ref

    @property
    def cone_constant(self) -> float:
        return self._nF[0]

    @property
    def cut_longitude(self) -> float:
        return wrap_longitude(self.lon0 + math.pi)

    def _rho(self, lat: float) -> float:
        n, f, _ = self._nF
        return f * math.tan(0.25 * math.pi + 0.5 * lat) ** -n

    def forward(self, c: GeoCoord) -> PlanePoint:
        if abs(c.lat) >= HALF_PI - 1e-12:
            raise _out_of_domain(self, c, "poles are excluded")
        n, _, rho_ref = self._nF
        lat = -c.lat if self._south else c.lat
        rho = self._rho(lat)
        theta = n * wrap_longitude(c.lon - self.lon0)
        x = rho * math.sin(theta)
        y = rho_ref - rho * math.cos(theta)
        return PlanePoint(x, -y if self._south else y)

    def inverse(self, p: PlanePoint) -> GeoCoord:
        n, f, rho_ref = self._nF
        y = -p.y if self._south else p.y
        dy = rho_ref - y
        rho = math.hypot(p.x, dy)
        if rho <= RHO_MIN:
            raise DomainError("no preimage: the apex corresponds to the excluded pole")
        theta = math.atan2(p.x, dy)
        dlam = theta / n
        if abs(dlam) > math.pi + 1e-9:
            raise DomainError(f"no preimage: map angle {theta:.9g} outside the cone wedge")
        lat = 2.0 * math.atan((f / rho) ** (1.0 / n)) - HALF_PI
        return GeoCoord(-lat if self._south else lat, self.lon0 + dlam)


# ---------------------------------------------------------------------------
# cordiform


@dataclass(frozen=True)
class Werner(Projection):
    """Heart-shaped map with the pole at the origin: parallels are concentric
    circular arcs at true colatitude radius, and arc length along every
    parallel and along the central meridian is true. Continuous at the pole
    (the limit point for every longitude)."""

    lon0: float = 0.0
    family: ClassVar[str] = "werner"

    def __post_init__(self):
        object.__setattr__(self, "lon0", wrap_longitude(self.lon0))

    @property
    def cut_longitude(self) -> float:
        return wrap_longitude(self.lon0 + math.pi)

    def forward(self, c: GeoCoord) -> PlanePoint:
        r = HALF_PI - c.lat
        if r < 1e-15:
            return PlanePoint(0.0, 0.0)
        theta = wrap_longitude(c.lon - self.lon0) * math.cos(c.lat) / r
        return PlanePoint(r * math.sin(theta), -r * math.cos(theta))

    def inverse(self, p: PlanePoint) -> GeoCoord:
        r = math.hypot(p.x, p.y)
        if r < 1e-15:
            return GeoCoord(HALF_PI, 0.0)
        if r > math.pi + 1e-9:
            raise DomainError(f"no preimage: radius {r:.9g} beyond the south pole arc")
        lat = HALF_PI - min(r, math.pi)
        if lat <= -HALF_PI + 1e-12:
            return GeoCoord(-HALF_PI, 0.0)
        theta = math.atan2(p.x, -p.y)
        dlam = theta * r / math.cos(lat)
        if abs(dlam) > math.pi + 1e-9:
            raise DomainError("no preimage: outside the cordiform outline")
        return GeoCoord(lat, self.lon0 + dlam)


# ---------------------------------------------------------------------------
# plain-text spec strings

FAMILIES: dict[str, type[Projection]] = {
    cls.family: cls
    for cls in (
        Equirectangular,
        Stereographic,
        Gnomonic,
        CentralOnTangentPlane,
        Orthographic,
        Mercator,
        EquidistantConic,
        LambertConformalConic,
        LambertAzimuthalEqualArea,
        LambertCylindricalEqualArea,
        Werner,
    )
}

_FAMILY_KEYS: dict[str, set[str]] = {
    "equirectangular": {"lat0", "lon0"},
    "stereographic": {"center"},
    "gnomonic": {"center"},
    "central": {"center"},
    "orthographic": {"center"},
    "lambert_azimuthal_equal_area": {"center"},
    "mercator": {"lon0", "cutoff"},
    "equidistant_conic": {"lat1", "lat2", "lon0", "cutoff"},
    "lambert_conformal_conic": {"lat1", "lat2", "lon0"},
    "lambert_cylindrical_equal_area": {"lat0", "lon0"},
    "werner": {"lon0"},
}


def parse_projection(text: str) -> Projection:
    """Build a projection from a plain-text spec string.

    Grammar: ``family key=value ...`` with whitespace-separated key=value
    pairs, all angles in decimal degrees. Keys per family:

    * ``equirectangular``: lat0 (standard parallel), lon0
    * ``mercator``: lon0, cutoff
    * ``equidistant_conic``: lat1, lat2 (required), lon0, cutoff
    * ``lambert_conformal_conic``: lat1, lat2 (required), lon0
    * ``lambert_cylindrical_equal_area``: lat0, lon0
    * ``werner``: lon0
    * azimuthal families (``stereographic``, ``gnomonic``, ``central``,
      ``orthographic``, ``lambert_azimuthal_equal_area``): center=LAT,LON

    Example: ``"equidistant_conic lat1=45 lat2=60 lon0=90"``.
    """
    tokens = text.split()
    if not tokens:
        raise UnknownFamilyError(
            "empty projection spec; valid families: " + ", ".join(sorted(FAMILIES))
        )
    name, pairs = tokens[0].lower(), tokens[1:]
    if name not in FAMILIES:
        raise UnknownFamilyError(
            f"unknown projection family {name!r}; valid families: "
            + ", ".join(sorted(FAMILIES))
        )
    allowed = _FAMILY_KEYS[name]
    values: dict[str, object] = {}
    for pair in pairs:
        key, sep, raw = pair.partition("=")
        if not sep or not raw:
            raise ParameterError(f"malformed parameter {pair!r}; expected key=value")
        key = key.lower()
        if key not in allowed:
            raise ParameterError(
                f"parameter {key!r} not valid for {name}; allowed: "
                + ", ".join(sorted(allowed))
            )
        try:
            if key == "center":
                lat_s, _, lon_s = raw.partition(",")
                values[key] = GeoCoord.from_degrees(float(lat_s), float(lon_s or "0"))
            else:
                values[key] = math.radians(float(raw))
        except MapError:
            raise
        except ValueError as exc:
            raise ParameterError(f"could not parse value in {pair!r}") from exc

    field_map = {"lat0": "phi0", "lat1": "phi_a", "lat2": "phi_b"}
    kwargs = {field_map.get(k, k): v for k, v in values.items()}
    if name in ("equidistant_conic", "lambert_conformal_conic"):
        missing = {"phi_a", "phi_b"} - set(kwargs)
        if missing:
            raise ParameterError(f"{name} requires lat1 and lat2")
    return FAMILIES[name](**kwargs)

"""Graticule construction, clipped polyline projection, gazetteer ingestion,
and deterministic SVG export.

The gazetteer format is CSV with header ``name,lat,lon``; coordinates are
decimal degrees or degree-minute strings like ``60°30′``, and lines starting
with ``#`` are comments. A prime-meridian offset (degrees east of Greenwich)
can be applied at parse time so historical tables referenced to another
meridian load with one flag.

Projections are named in plain text as ``family key=value ...`` with degree
values; the full grammar and per-family keys live on
:func:`mapproj.projections.parse_projection`.

SVG output is a pure function of the scene: fixed element order (parallels,
meridians, geodesics, points, labels), all numbers fixed to 6 decimals (which
also absorbs cross-platform libm jitter), an explicit viewBox computed from
the projected bounds plus margins, and the y axis flipped so north is up.
Projected parallels that are circular to within 1e-9 are emitted as SVG arc
commands rather than polylines, so a conic graticule round-trips its radii.
"""

from __future__ import annotations

import csv
import io
import math
import re
from dataclasses import dataclass
from xml.sax.saxutils import escape

from .errors import DomainError, ParameterError
from .geo import HALF_PI, GeoCoord, GeoRegion, sample_great_circle, wrap_longitude
from .geodesics import PlanePolyline, fit_circular_arc
from .projections import PlanePoint, Projection

# meridian curves stop this far (radians) from the singular pole points
POLE_CLIP = 1e-6

# projected curves at least this circular (max residual) render as arcs
ARC_RESIDUAL = 1e-9


@dataclass(frozen=True)
class Graticule:
    """Selected meridian and parallel curves over a region, densely sampled."""

    parallels: tuple[tuple[GeoCoord, ...], ...]
    meridians: tuple[tuple[GeoCoord, ...], ...]
    dphi: float
    dlam: float
    samples_per_degree: float
    region: GeoRegion


@dataclass(frozen=True)
class GazetteerEntry:
    name: str
    coord: GeoCoord

    def __post_init__(self):
        if not self.name:
            raise ParameterError("gazetteer entry needs a non-empty name")


@dataclass(frozen=True)
class MapScene:
    """Everything one render needs: projection, layers, scale and margins."""

    projection: Projection
    graticule: Graticule | None = None
    places: tuple[GazetteerEntry, ...] = ()
    geodesics: tuple[tuple[GeoCoord, GeoCoord, int], ...] = ()
    scale: float = 200.0
    margin: float = 20.0


def _multiples(lo: float, hi: float, step: float) -> list[float]:
    """Multiples of step inside [lo, hi], with slack for radian rounding."""
    k_lo = math.ceil(lo / step - 1e-9)
    k_hi = math.floor(hi / step + 1e-9)
    return [k * step for k in range(k_lo, k_hi + 1)]


def _samples(lo: float, hi: float, per_degree: float) -> list[float]:
    count = max(2, int(round(math.degrees(hi - lo) * per_degree)) + 1)
    span = hi - lo
    return [lo + span * i / (count - 1) for i in range(count)]


def build_graticule(
    region: GeoRegion, dphi: float, dlam: float, samples_per_degree: float = 4.0
) -> Graticule:
    """Parallels at multiples of dphi and meridians at multiples of dlam
    crossing the region, each sampled ``samples_per_degree`` times per degree
    of arc. Poles never appear on meridian curves (singular points of the
    foliation); a spacing wider than the region degrades to the region's
    boundary curves.
    """
    if dphi <= 0 or dlam <= 0:
        raise ParameterError("graticule spacings must be positive")
    if samples_per_degree <= 0:
        raise ParameterError("sampling density must be positive")

    lat_cap = HALF_PI - POLE_CLIP
    lats = [v for v in _multiples(region.lat_lo, region.lat_hi, dphi) if abs(v) < lat_cap]
    if not lats:
        lats = sorted({max(region.lat_lo, -lat_cap), min(region.lat_hi, lat_cap)})

    lons = _multiples(region.lon_lo, region.lon_hi, dlam)
    # a full circle repeats its seam meridian; keep one copy
    seen: dict[float, float] = {}
    for lon in lons:
        seen.setdefault(round(wrap_longitude(lon), 12), lon)
    lons = sorted(seen.values())
    if not lons:
        lons = [region.lon_lo, region.lon_hi]

    lon_samples = _samples(region.lon_lo, region.lon_hi, samples_per_degree)
    mer_lo = max(region.lat_lo, -lat_cap)
    mer_hi = min(region.lat_hi, lat_cap)
    lat_samples = _samples(mer_lo, mer_hi, samples_per_degree)

    parallels = tuple(
        tuple(GeoCoord(lat, lon) for lon in lon_samples) for lat in lats
    )
    meridians = tuple(
        tuple(GeoCoord(lat, lon) for lat in lat_samples) for lon in lons
    )
    return Graticule(
        parallels=parallels, meridians=meridians, dphi=dphi, dlam=dlam,
        samples_per_degree=samples_per_degree, region=region,
    )


def project_polyline(proj: Projection, curve) -> PlanePolyline:
    """Forward image of a sampled curve, split into unbroken segments.

    Out-of-domain samples open a break. Families with an antimeridian tear
    (cylindrical, conic, cordiform) additionally split wherever the curve
    crosses the cut, detected as a wrapped-longitude jump larger than pi
    between consecutive samples.
    """
    cut = proj.cut_longitude
    lon0 = None if cut is None else wrap_longitude(cut + math.pi)
    segments: list[tuple[PlanePoint, ...]] = []
    current: list[PlanePoint] = []
    note: str | None = None
    prev_u: float | None = None
    for c in curve:
        u = None if lon0 is None else wrap_longitude(c.lon - lon0)
        if prev_u is not None and u is not None and abs(u - prev_u) > math.pi:
            if len(current) >= 2:
                segments.append(tuple(current))
            current = []
        prev_u = u
        try:
            current.append(proj.forward(c))
        except DomainError as exc:
            if note is None:
                note = str(exc)
            if len(current) >= 2:
                segments.append(tuple(current))
            current = []
    if len(current) >= 2:
        segments.append(tuple(current))
    return PlanePolyline(tuple(segments), note=note if not segments else None)


# ---------------------------------------------------------------------------
# gazetteer

_DEG_MIN = re.compile(
    r"^\s*(?P<sign>[+-]?)(?P<deg>\d+(?:\.\d+)?)°"
    r"(?:\s*(?P<min>\d+(?:\.\d+)?)[′'])?\s*$"
)


def _parse_coordinate(text: str, kind: str, line_no: int) -> float:
    """Decimal degrees or degree-minute text to degrees."""
    text = text.strip()
    m = _DEG_MIN.match(text)
    if m:
        value = float(m.group("deg")) + float(m.group("min") or 0.0) / 60.0
        return -value if m.group("sign") == "-" else value
    try:
        return float(text)
    except ValueError:
        raise ParameterError(f"malformed {kind} {text!r}, line {line_no}") from None


def load_gazetteer(text: str, prime_meridian_deg: float = 0.0) -> list[GazetteerEntry]:
    """Parse gazetteer CSV; see the module docstring for the format.

    ``prime_meridian_deg`` is added to every longitude, converting
    coordinates referenced to another prime meridian into the standard one.
    """
    numbered = [
        (i + 1, line)
        for i, line in enumerate(text.splitlines())
        if line.strip() and not line.lstrip().startswith("#")
    ]
    if not numbered:
        raise ParameterError("gazetteer is empty")
    header_no, header = numbered[0]
    if [col.strip().lower() for col in header.split(",")] != ["name", "lat", "lon"]:
        raise ParameterError(f"expected header 'name,lat,lon', line {header_no}")
    entries: list[GazetteerEntry] = []
    for line_no, line in numbered[1:]:
        row = next(csv.reader([line]))
        if len(row) != 3:
            raise ParameterError(f"expected 3 fields, got {len(row)}, line {line_no}")
        name = row[0].strip()
        if not name:
            raise ParameterError(f"empty name, line {line_no}")
        lat_deg = _parse_coordinate(row[1], "lat", line_no)
        lon_deg = _parse_coordinate(row[2], "lon", line_no)
        if abs(lat_deg) > 90.0:
            raise ParameterError(f"lat out of range, line {line_no}")
        if abs(lon_deg) > 360.0:
            raise ParameterError(f"lon out of range, line {line_no}")
        entries.append(
            GazetteerEntry(
                name=name,
                coord=GeoCoord.from_degrees(lat_deg, lon_deg + prime_meridian_deg),
            )
        )
    return entries


def dump_gazetteer(entries) -> str:
    """Inverse of load_gazetteer (round-trips through shortest-repr floats)."""
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["name", "lat", "lon"])
    for entry in entries:
        writer.writerow([entry.name, repr(entry.coord.lat_deg), repr(entry.coord.lon_deg)])
    return out.getvalue()


# ---------------------------------------------------------------------------
# SVG rendering

def _fmt(v: float) -> str:
    s = f"{v:.6f}"
    return "0.000000" if s == "-0.000000" else s


class _SceneTransform:
    """Map plane -> SVG pixels: uniform scale, margins, y flipped north-up."""

    def __init__(self, xs, ys, scale: float, margin: float):
        self.scale = scale
        self.margin = margin
        if xs:
            self.min_x, self.max_y = min(xs), max(ys)
            self.width = (max(xs) - min(xs)) * scale + 2 * margin
            self.height = (max(ys) - min(ys)) * scale + 2 * margin
        else:
            self.min_x = self.max_y = 0.0
            self.width = self.height = 2 * margin

    def point(self, p: PlanePoint) -> tuple[float, float]:
        return (
            self.margin + (p.x - self.min_x) * self.scale,
            self.margin + (self.max_y - p.y) * self.scale,
        )


def _path_linear(points, tr: _SceneTransform) -> str:
    cmds = []
    for i, p in enumerate(points):
        x, y = tr.point(p)
        cmds.append(f"{'M' if i == 0 else 'L'} {_fmt(x)} {_fmt(y)}")
    return " ".join(cmds)


def _path_arc(points, tr: _SceneTransform) -> str | None:
    """Arc-command path for a circular segment, or None if it is not one."""
    if len(points) < 3:
        return None
    try:
        fit = fit_circular_arc(PlanePolyline((tuple(points),)))
    except ParameterError:
        return None
    if fit.collinear or fit.max_residual > ARC_RESIDUAL or fit.center is None:
        return None
    cx, cy = tr.point(fit.center)
    radius = fit.radius * tr.scale
    angles = []
    for p in points:
        x, y = tr.point(p)
        angles.append(math.atan2(y - cy, x - cx))
    swept = 0.0
    for a0, a1 in zip(angles, angles[1:]):
        delta = math.fmod(a1 - a0, 2 * math.pi)
        if delta <= -math.pi:
            delta += 2 * math.pi
        elif delta > math.pi:
            delta -= 2 * math.pi
        swept += delta
    if abs(swept) >= 2 * math.pi - 0.1:
        return None
    x0, y0 = tr.point(points[0])
    x1, y1 = tr.point(points[-1])
    large_arc = 1 if abs(swept) > math.pi else 0
    sweep = 1 if swept > 0 else 0
    return (
        f"M {_fmt(x0)} {_fmt(y0)} "
        f"A {_fmt(radius)} {_fmt(radius)} 0 {large_arc} {sweep} {_fmt(x1)} {_fmt(y1)}"
    )


def _curve_layer(name: str, polylines, tr: _SceneTransform, style: str, arcs: bool) -> list[str]:
    lines = [f'  <g id="{name}" {style}>']
    for poly in polylines:
        for seg in poly.segments:
            d = _path_arc(seg, tr) if arcs else None
            if d is None:
                d = _path_linear(seg, tr)
            lines.append(f'    <path d="{d}"/>')
    lines.append("  </g>")
    return lines


def render_svg(scene: MapScene) -> str:
    """Deterministic SVG 1.1 document for a scene; see the module docstring
    for the layout guarantees. Layers outside the projection domain are
    clipped; an empty scene still yields a valid document."""
    proj = scene.projection
    parallel_polys = []
    meridian_polys = []
    if scene.graticule is not None:
        parallel_polys = [project_polyline(proj, c) for c in scene.graticule.parallels]
        meridian_polys = [project_polyline(proj, c) for c in scene.graticule.meridians]
    geodesic_polys = [
        project_polyline(proj, sample_great_circle(a, b, n))
        for a, b, n in scene.geodesics
    ]
    markers: list[tuple[PlanePoint, str]] = []
    for entry in scene.places:
        try:
            markers.append((proj.forward(entry.coord), entry.name))
        except DomainError:
            continue

    xs: list[float] = []
    ys: list[float] = []
    for polys in (parallel_polys, meridian_polys, geodesic_polys):
        for poly in polys:
            for seg in poly.segments:
                xs.extend(p.x for p in seg)
                ys.extend(p.y for p in seg)
    xs.extend(p.x for p, _ in markers)
    ys.extend(p.y for p, _ in markers)
    tr = _SceneTransform(xs, ys, scene.scale, scene.margin)

    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'viewBox="0 0 {_fmt(tr.width)} {_fmt(tr.height)}">',
    ]
    lines += _curve_layer(
        "parallels", parallel_polys, tr,
        'fill="none" stroke="#708090" stroke-width="0.6"', arcs=True,
    )
    lines += _curve_layer(
        "meridians", meridian_polys, tr,
        'fill="none" stroke="#708090" stroke-width="0.6"', arcs=False,
    )
    lines += _curve_layer(
        "geodesics", geodesic_polys, tr,
        'fill="none" stroke="#b22222" stroke-width="1.0"', arcs=False,
    )
    lines.append('  <g id="points" fill="#1a1a1a">')
    for p, _ in markers:
        x, y = tr.point(p)
        lines.append(f'    <circle cx="{_fmt(x)}" cy="{_fmt(y)}" r="2.5"/>')
    lines.append("  </g>")
    lines.append('  <g id="labels" font-family="sans-serif" font-size="10">')
    for p, name in markers:
        x, y = tr.point(p)
        lines.append(
            f'    <text x="{_fmt(x + 4.0)}" y="{_fmt(y - 4.0)}">{escape(name)}</text>'
        )
    lines.append("  </g>")
    lines.append("</svg>")
    return "\n".join(lines) + "\n"

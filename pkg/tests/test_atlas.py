import math
import re

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mapproj import (
    EquidistantConic,
    GeoCoord,
    GeoRegion,
    Mercator,
    Stereographic,
)
from mapproj.atlas import (
    GazetteerEntry,
    MapScene,
    build_graticule,
    dump_gazetteer,
    load_gazetteer,
    project_polyline,
    render_svg,
)
from mapproj.distortion import tissot
from mapproj.errors import ParameterError

DELISLE = EquidistantConic(math.radians(45), math.radians(60), lon0=math.radians(90))
BAND = GeoRegion.from_degrees(45, 70, 30, 150)


class TestBuildGraticule:
    def test_global_counts(self):
        g = build_graticule(
            GeoRegion.from_degrees(-90, 90, -180, 180),
            math.radians(10), math.radians(10),
        )
        assert len(g.parallels) == 17  # -80 .. 80, poles excluded
        assert len(g.meridians) == 36  # seam meridian deduplicated

    def test_region_counts(self):
        g = build_graticule(BAND, math.radians(5), math.radians(5))
        assert len(g.parallels) == 6
        assert len(g.meridians) == 25

    def test_poles_excluded_from_meridians(self):
        g = build_graticule(
            GeoRegion.from_degrees(-90, 90, 0, 30), math.radians(30), math.radians(30)
        )
        for curve in g.meridians:
            assert max(abs(c.lat) for c in curve) < math.pi / 2

    def test_wide_spacing_degrades_to_boundary_curves(self):
        g = build_graticule(
            GeoRegion.from_degrees(46, 49, 11, 13), math.radians(10), math.radians(10)
        )
        assert [round(c[0].lat_deg, 6) for c in g.parallels] == [46.0, 49.0]

    def test_bad_spacing(self):
        with pytest.raises(ParameterError):
            build_graticule(BAND, 0.0, math.radians(5))

    def test_sampling_density(self):
        g = build_graticule(BAND, math.radians(5), math.radians(5), samples_per_degree=2.0)
        parallel = g.parallels[0]
        assert len(parallel) == 241  # 120 degrees * 2 + 1


class TestProjectPolyline:
    def test_equator_under_mercator_single_segment(self):
        curve = [GeoCoord.from_degrees(0, d) for d in range(-170, 171, 10)]
        poly = project_polyline(Mercator(), curve)
        assert len(poly.segments) == 1
        ys = {p.y for p in poly.segments[0]}
        assert ys == {0.0}

    def test_full_parallel_splits_at_cone_cut(self):
        curve = [GeoCoord.from_degrees(50, d) for d in range(-180, 180, 2)]
        poly = project_polyline(DELISLE, curve)
        assert len(poly.segments) == 2

    def test_fully_outside_curve_records_reason(self):
        curve = [GeoCoord.from_degrees(88, d) for d in range(0, 40, 5)]
        poly = project_polyline(Mercator(), curve)
        assert poly.is_empty
        assert "cutoff" in poly.note

    def test_azimuthal_families_never_split_on_longitude(self):
        curve = [GeoCoord.from_degrees(-50, d) for d in range(-180, 180, 2)]
        poly = project_polyline(Stereographic(), curve)
        assert len(poly.segments) == 1


class TestGazetteer:
    def test_decimal_parse(self):
        entries = load_gazetteer("name,lat,lon\nAlexandria,31.2,29.92\n")
        assert entries[0].name == "Alexandria"
        assert entries[0].coord.lat_deg == pytest.approx(31.2)
        assert entries[0].coord.lon_deg == pytest.approx(29.92)

    def test_degree_minute_parse(self):
        entries = load_gazetteer("name,lat,lon\nX,60°30′,24°58′\n")
        assert entries[0].coord.lat_deg == pytest.approx(60.5)
        assert entries[0].coord.lon_deg == pytest.approx(24.966666666666665)

    def test_comments_and_blanks_skipped(self):
        text = "# capitals\n\nname,lat,lon\n# northern\nOslo,59.91,10.75\n"
        assert len(load_gazetteer(text)) == 1

    def test_lat_out_of_range_names_line(self):
        with pytest.raises(ParameterError, match=r"lat out of range, line 3"):
            load_gazetteer("name,lat,lon\nA,10,20\nY,95,10\n")

    def test_malformed_value_names_line(self):
        with pytest.raises(ParameterError, match=r"line 2"):
            load_gazetteer("name,lat,lon\nA,1o,20\n")

    def test_wrong_field_count(self):
        with pytest.raises(ParameterError, match=r"line 2"):
            load_gazetteer("name,lat,lon\nA,10\n")

    def test_header_required(self):
        with pytest.raises(ParameterError, match="header"):
            load_gazetteer("place,y,x\nA,1,2\n")

    def test_prime_meridian_offset(self):
        # longitudes measured east of Alexandria (29.92 E of Greenwich)
        entries = load_gazetteer("name,lat,lon\nA,31.2,0\n", prime_meridian_deg=29.92)
        assert entries[0].coord.lon_deg == pytest.approx(29.92)

    def test_duplicate_names_allowed(self):
        entries = load_gazetteer("name,lat,lon\nA,1,2\nA,3,4\n")
        assert len(entries) == 2

    def test_round_trip(self):
        entries = load_gazetteer(
            'name,lat,lon\nAlexandria,31.2,29.92\n"Comma, Town",-5.25,170.125\n'
        )
        back = load_gazetteer(dump_gazetteer(entries))
        for a, b in zip(entries, back):
            assert a.name == b.name
            assert a.coord.lat == pytest.approx(b.coord.lat, abs=1e-12)
            assert a.coord.lon == pytest.approx(b.coord.lon, abs=1e-12)

    @given(
        st.lists(
            st.tuples(
                st.text(
                    alphabet=st.characters(
                        blacklist_categories=("Cs", "Cc"), blacklist_characters="\n\r"
                    ),
                    min_size=1,
                ).map(str.strip).filter(lambda s: s and not s.startswith("#")),
                st.floats(-89.99, 89.99),
                st.floats(-179.99, 179.99),
            ),
            min_size=1,
            max_size=8,
        )
    )
    @settings(max_examples=60)
    def test_round_trip_property(self, rows):
        entries = [
            GazetteerEntry(name=n, coord=GeoCoord.from_degrees(lat, lon))
            for n, lat, lon in rows
        ]
        back = load_gazetteer(dump_gazetteer(entries))
        assert [e.name for e in back] == [e.name for e in entries]
        for a, b in zip(entries, back):
            assert abs(a.coord.lat - b.coord.lat) < 1e-12
            assert abs(a.coord.lon - b.coord.lon) < 1e-12


def _delisle_scene() -> MapScene:
    return MapScene(
        projection=DELISLE,
        graticule=build_graticule(BAND, math.radians(5), math.radians(10)),
        places=(
            GazetteerEntry("Moscow", GeoCoord.from_degrees(55.75, 37.6)),
            GazetteerEntry("Okhotsk", GeoCoord.from_degrees(59.4, 143.2)),
        ),
        geodesics=(
            (GeoCoord.from_degrees(55.75, 37.6), GeoCoord.from_degrees(59.4, 143.2), 65),
        ),
    )


class TestRenderSvg:
    def test_empty_scene_is_valid(self):
        svg = render_svg(MapScene(projection=Mercator()))
        assert svg.startswith('<?xml version="1.0"')
        assert 'viewBox="0 0 40.000000 40.000000"' in svg
        for layer in ("parallels", "meridians", "geodesics", "points", "labels"):
            assert f'id="{layer}"' in svg

    def test_single_point_scene(self):
        scene = MapScene(
            projection=Mercator(),
            places=(GazetteerEntry("Alexandria", GeoCoord.from_degrees(31.2, 29.92)),),
        )
        svg = render_svg(scene)
        assert svg.count("<circle") == 1
        assert ">Alexandria</text>" in svg

    def test_byte_identical_repeat_renders(self):
        scene = _delisle_scene()
        assert render_svg(scene) == render_svg(scene)

    def test_conic_parallels_render_as_concentric_arcs(self):
        svg = render_svg(_delisle_scene())
        arc_cmds = re.findall(
            r'd="M ([-\d.]+) ([-\d.]+) A ([-\d.]+) ([-\d.]+) 0 (\d) (\d) ([-\d.]+) ([-\d.]+)"',
            svg,
        )
        assert len(arc_cmds) == 6  # one per parallel at 5-degree spacing
        radii = sorted(float(m[2]) for m in arc_cmds)
        spacing = math.radians(5) * 200.0  # dphi times scene scale
        gaps = [b - a for a, b in zip(radii, radii[1:])]
        for gap in gaps:
            assert gap == pytest.approx(spacing, abs=1e-3)
        # all arcs share the cone apex as center: recover each center from
        # its endpoints and radius, picking the candidate above the map
        centers = []
        for x0, y0, r, _, laf, sweep, x1, y1 in (map(float, m) for m in arc_cmds):
            mx, my = (x0 + x1) / 2.0, (y0 + y1) / 2.0
            half = math.hypot(x1 - x0, y1 - y0) / 2.0
            lift = math.sqrt(max(r * r - half * half, 0.0))
            ux, uy = -(y1 - y0) / (2 * half), (x1 - x0) / (2 * half)
            c1 = (mx + lift * ux, my + lift * uy)
            c2 = (mx - lift * ux, my - lift * uy)
            centers.append(min((c1, c2), key=lambda c: c[1]))
        cx = [c[0] for c in centers]
        cy = [c[1] for c in centers]
        assert max(cx) - min(cx) < 1e-2
        assert max(cy) - min(cy) < 1e-2

    def test_graticule_crossing_angles_match_tissot(self):
        # rendering must not distort: measure the meridian/parallel crossing
        # angle from densely sampled curves and compare with theta_prime
        proj = DELISLE
        grat = build_graticule(BAND, math.radians(5), math.radians(10), samples_per_degree=40)
        lat = grat.parallels[2][0].lat
        lon = grat.meridians[3][0].lon
        par = [c for c in grat.parallels[2]]
        mer = [c for c in grat.meridians[3]]
        i = min(range(len(par)), key=lambda j: abs(par[j].lon - lon))
        j = min(range(len(mer)), key=lambda j: abs(mer[j].lat - lat))
        p0, p1 = proj.forward(par[i]), proj.forward(par[i + 1])
        m0, m1 = proj.forward(mer[j]), proj.forward(mer[j + 1])
        v_par = np.array([p1.x - p0.x, p1.y - p0.y])
        v_mer = np.array([m1.x - m0.x, m1.y - m0.y])
        cosang = float(
            np.dot(v_par, v_mer) / (np.linalg.norm(v_par) * np.linalg.norm(v_mer))
        )
        angle = math.acos(max(-1.0, min(1.0, cosang)))
        theta = tissot(proj, GeoCoord(lat, lon)).theta_prime
        assert abs(angle - theta) < 1e-3

    def test_numbers_fixed_to_six_decimals(self):
        svg = render_svg(_delisle_scene())
        for num in re.findall(r'[xy12]="([-\d.]+)"', svg):
            whole, frac = num.split(".")
            assert len(frac) == 6

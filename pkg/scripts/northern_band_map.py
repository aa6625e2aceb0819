#!/usr/bin/env python3
"""Render the classic northern-band conic map and report its geodesic bows.

Builds the two-standard-parallel equidistant conic (45/60) over the band
45-70N x 30-150E, marks a few historical stations, overlays the
Moscow-Okhotsk great circle, and writes an SVG next to a small distortion
summary on stdout.

Usage: python scripts/northern_band_map.py [--out out/northern_band.svg]
"""

import argparse
import math
import os

from mapproj import EquidistantConic, GeoRegion
from mapproj.atlas import MapScene, build_graticule, load_gazetteer, render_svg
from mapproj.conic_design import apex_overshoot_degrees, semicircle_longitude_span
from mapproj.distortion import max_distortion_scan
from mapproj.geodesics import fit_circular_arc, project_geodesic, straightness

STATIONS = """\
name,lat,lon
Saint Petersburg,59.9375,30.3086
Moscow,55.75,37.6
Tobolsk,58.2,68.25
Irkutsk,52.28,104.28
Okhotsk,59.4,143.2
"""


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", default="out/northern_band.svg")
    args = parser.parse_args()

    proj = EquidistantConic(math.radians(45), math.radians(60), lon0=math.radians(90))
    region = GeoRegion.from_degrees(45, 70, 30, 150)
    places = load_gazetteer(STATIONS)
    moscow = places[1].coord
    okhotsk = places[4].coord

    scene = MapScene(
        projection=proj,
        graticule=build_graticule(region, math.radians(5), math.radians(10)),
        places=tuple(places),
        geodesics=((moscow, okhotsk, 101),),
    )
    os.makedirs(os.path.dirname(args.out) or ".", exist_ok=True)
    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write(render_svg(scene))
    print(f"wrote {args.out}")

    print(f"cone constant n = {proj.constants.n:.7f}")
    print(f"apex overshoot beyond the pole: "
          f"{apex_overshoot_degrees(proj.phi_a, proj.phi_b):.4f} deg")
    print(f"half-circle longitude span: "
          f"{semicircle_longitude_span(proj.phi_a, proj.phi_b):.2f} deg")

    scan = max_distortion_scan(proj, region, 26, 25)
    k = scan["k"]
    print(f"parallel scale over the band: {k.min_value:.5f} "
          f"(at {k.argmin.lat_deg:.2f}N) to {k.max_value:.5f} "
          f"(at {k.argmax.lat_deg:.2f}N)")

    poly = project_geodesic(proj, moscow, okhotsk, 101)
    report = straightness(poly)
    fit = fit_circular_arc(poly)
    print("Moscow-Okhotsk great circle on the map:")
    print(f"  chord {report.chord:.5f}, sagitta {report.sagitta:.5f}, "
          f"bow ratio {report.ratio:.4f}")
    print(f"  fitted arc radius {fit.radius:.4f} "
          f"({fit.radius / fit.chord:.2f} chords), residual {fit.max_residual:.6f}")


if __name__ == "__main__":
    main()

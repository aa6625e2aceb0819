import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mapproj import EquidistantConic, GeoCoord, conic_constants
from mapproj.conic_design import (
    LatBand,
    apex_overshoot_degrees,
    band_max_error,
    equioscillation_residual,
    minimax_parallels,
    parallel_scale,
    quarter_rule,
    semicircle_longitude_span,
)
from mapproj.distortion import tissot
from mapproj.errors import DomainError, ParameterError


class TestParallelScale:
    def test_unit_at_standard_parallels(self):
        pa, pb = math.radians(45), math.radians(60)
        k = conic_constants(pa, pb)
        assert parallel_scale(k, pa, pa) == pytest.approx(1.0, abs=1e-12)
        assert parallel_scale(k, pa, pb) == pytest.approx(1.0, abs=1e-12)

    def test_interior_dip(self):
        pa, pb = math.radians(45), math.radians(60)
        k = conic_constants(pa, pb)
        assert parallel_scale(k, pa, math.radians(52.5)) == pytest.approx(
            0.9914448613738105, abs=1e-12
        )

    def test_edge_value_matches_distortion_module(self):
        # independent route: finite-difference Tissot k at the same point
        pa, pb = math.radians(45), math.radians(60)
        k = conic_constants(pa, pb)
        closed = parallel_scale(k, pa, math.radians(70))
        assert closed == pytest.approx(1.0582090546569827, abs=1e-12)
        fd = tissot(EquidistantConic(pa, pb), GeoCoord.from_degrees(70, 0)).k
        assert fd == pytest.approx(closed, abs=1e-8)

    def test_beyond_apex(self):
        pa, pb = math.radians(45), math.radians(60)
        k = conic_constants(pa, pb)
        with pytest.raises(DomainError):
            parallel_scale(k, pa, k.rho_ref + pa)


class TestLatBand:
    def test_validation(self):
        with pytest.raises(ParameterError):
            LatBand.from_degrees(70, 45)
        with pytest.raises(ParameterError):
            LatBand.from_degrees(-5, 45)
        with pytest.raises(ParameterError):
            LatBand.from_degrees(45, 90)
        with pytest.raises(ParameterError):
            LatBand(1.0, 1.0 + 1e-8)


class TestQuarterRule:
    def test_45_70(self):
        choice = quarter_rule(LatBand.from_degrees(45, 70))
        assert math.degrees(choice.phi_a) == pytest.approx(51.25, abs=1e-12)
        assert math.degrees(choice.phi_b) == pytest.approx(63.75, abs=1e-12)

    def test_40_70(self):
        choice = quarter_rule(LatBand.from_degrees(40, 70))
        assert math.degrees(choice.phi_a) == pytest.approx(47.5, abs=1e-12)
        assert math.degrees(choice.phi_b) == pytest.approx(62.5, abs=1e-12)

    def test_max_error_regression_baseline(self):
        # frozen from the 10^4-point dense scan
        choice = quarter_rule(LatBand.from_degrees(45, 70))
        assert choice.max_error == pytest.approx(0.02470952683847205, abs=1e-12)

    def test_profile_spans_band(self):
        band = LatBand.from_degrees(45, 70)
        choice = quarter_rule(band)
        assert choice.profile_lats[0] == pytest.approx(band.phi_lo)
        assert choice.profile_lats[-1] == pytest.approx(band.phi_hi)
        assert len(choice.profile_lats) == len(choice.profile_errors)


class TestMinimax:
    def test_dominates_quarter_rule(self):
        for lo, hi in ((45, 70), (40, 70), (30, 60)):
            band = LatBand.from_degrees(lo, hi)
            assert minimax_parallels(band).max_error <= quarter_rule(band).max_error

    def test_equioscillation(self):
        band = LatBand.from_degrees(45, 70)
        choice = minimax_parallels(band)
        assert equioscillation_residual(band, choice) < 1e-4

    def test_against_grid_search_oracle(self):
        # coarse 2-D grid search over parallel pairs cannot beat the solver
        # by more than its own resolution allows
        band = LatBand.from_degrees(45, 70)
        best = minimax_parallels(band).max_error
        lo, hi = band.phi_lo, band.phi_hi
        grid_best = min(
            band_max_error(pa, pb, band, npts=801)
            for pa in np.linspace(lo + 0.01, hi - 0.02, 40)
            for pb in np.linspace(lo + 0.02, hi - 0.01, 40)
            if pa < pb
        )
        assert best <= grid_best + 1e-6

    def test_interior_sign_structure(self):
        # positive at both edges, one negative region between the parallels
        band = LatBand.from_degrees(45, 70)
        choice = minimax_parallels(band)
        lats, errs = choice.profile_lats, choice.profile_errors
        assert errs[0] > 0 and errs[-1] > 0
        inside = errs[(lats > choice.phi_a) & (lats < choice.phi_b)]
        assert inside.min() < 0
        signs = np.sign(errs[np.abs(errs) > 1e-12])
        flips = int(np.sum(signs[1:] != signs[:-1]))
        assert flips == 2

    def test_monotone_in_nested_bands(self):
        widths = [(50, 55), (47.5, 57.5), (45, 60), (42.5, 62.5), (40, 65)]
        errors = [minimax_parallels(LatBand.from_degrees(*w)).max_error for w in widths]
        assert all(b >= a for a, b in zip(errors, errors[1:]))

    def test_degenerate_band_collapses_to_quarter_rule(self):
        band = LatBand(math.radians(50), math.radians(50) + 2e-6)
        q = quarter_rule(band)
        m = minimax_parallels(band)
        assert abs(m.phi_a - q.phi_a) < 10 * band.width
        assert abs(m.phi_b - q.phi_b) < 10 * band.width

    def test_deterministic(self):
        band = LatBand.from_degrees(45, 70)
        one = minimax_parallels(band)
        two = minimax_parallels(band)
        assert one.phi_a == two.phi_a
        assert one.phi_b == two.phi_b
        assert one.max_error == two.max_error
        q1, q2 = quarter_rule(band), quarter_rule(band)
        assert (q1.phi_a, q1.phi_b, q1.max_error) == (q2.phi_a, q2.phi_b, q2.max_error)

    def test_bad_tol(self):
        with pytest.raises(ParameterError):
            minimax_parallels(LatBand.from_degrees(45, 70), tol=0.0)


class TestApexOvershoot:
    def test_45_60(self):
        assert apex_overshoot_degrees(math.radians(45), math.radians(60)) == pytest.approx(
            6.21320343559643, abs=1e-10
        )

    def test_tangent_cone_limit(self):
        pa = math.radians(45)
        want = math.degrees(math.cos(pa) / math.sin(pa) - (math.pi / 2 - pa))
        got = apex_overshoot_degrees(pa, pa + 1e-6)
        assert got == pytest.approx(want, abs=1e-4)

    def test_low_latitude_pair_large_but_positive(self):
        over = apex_overshoot_degrees(math.radians(10), math.radians(20))
        assert over > 90.0

    @given(
        st.floats(1.0, 80.0),
        st.floats(1.0, 8.0),
    )
    @settings(max_examples=100)
    def test_always_positive(self, lo_deg, gap_deg):
        pa = math.radians(lo_deg)
        pb = math.radians(min(lo_deg + gap_deg, 89.5))
        if pb <= pa:
            return
        assert apex_overshoot_degrees(pa, pb) > 0.0


class TestSemicircleSpan:
    def test_45_60(self):
        assert semicircle_longitude_span(
            math.radians(45), math.radians(60)
        ) == pytest.approx(227.53426775244478, abs=1e-9)

    def test_polar_limit_approaches_180(self):
        # n -> 1 as the parallels approach the pole (the cone flattens to a
        # tangent plane with no longitude defect)
        span = semicircle_longitude_span(math.radians(89.0), math.radians(89.5))
        assert span == pytest.approx(180.0, abs=0.1)

    def test_equatorial_limit_diverges(self):
        # toward the equator the cone degenerates to a cylinder: n -> 0
        assert semicircle_longitude_span(math.radians(0.5), math.radians(1.0)) > 1e4

    @given(st.floats(1.0, 80.0), st.floats(0.5, 9.0))
    @settings(max_examples=100)
    def test_always_wider_than_180(self, lo_deg, gap_deg):
        pa = math.radians(lo_deg)
        pb = math.radians(min(lo_deg + gap_deg, 89.5))
        if pb <= pa:
            return
        assert semicircle_longitude_span(pa, pb) > 180.0

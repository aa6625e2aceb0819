"""Standard-parallel selection for the equidistant conic.

For a latitude band the parallel-scale error k(phi) - 1 vanishes at both
standard parallels, dips below zero between them, and grows positive toward
the band edges, so the choice of parallels is a 1-D minimax problem (meridian
scale is exactly 1 for this family, and k does not depend on longitude). Two
selectors are provided: the classical quarter-width rule, and a minimax
solver whose optimum equioscillates, i.e. the error magnitudes at the two
band edges and at the interior dip all agree.

The minimax optimum is found by nested bisection on the balance conditions:
for a trial inner parallel, the outer parallel is bisected until the
upper-edge error equals the dip magnitude, and the inner parallel is in turn
bisected until the two edge errors agree. Both brackets provably change sign,
which makes the search unconditionally convergent and deterministic; plain
coordinate descent on the raw parallels stalls on the non-axis-aligned ridge
of the max envelope and cannot reach equioscillation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import ConvergenceError, DomainError, ParameterError
from .geo import HALF_PI
from .projections import ConicConstants, RHO_MIN, conic_constants

SCAN_POINTS = 10_001
MAX_BISECT_STEPS = 200
DEFAULT_TOL = 1e-6

_INV_GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0


@dataclass(frozen=True)
class LatBand:
    """Northern latitude band 0 <= phi_lo < phi_hi < pi/2."""

    phi_lo: float
    phi_hi: float

    def __post_init__(self):
        if not 0.0 <= self.phi_lo < self.phi_hi < HALF_PI:
            raise ParameterError(
                "band must satisfy 0 <= lo < hi < 90°, got "
                f"[{math.degrees(self.phi_lo):.4f}°, {math.degrees(self.phi_hi):.4f}°]"
            )
        if self.phi_hi - self.phi_lo <= 1e-6:
            raise ParameterError("band narrower than 1e-6 rad")

    @classmethod
    def from_degrees(cls, lo_deg: float, hi_deg: float) -> "LatBand":
        return cls(math.radians(lo_deg), math.radians(hi_deg))

    @property
    def width(self) -> float:
        return self.phi_hi - self.phi_lo


@dataclass(frozen=True, eq=False)
class ParallelChoice:
    """A pair of standard parallels with its worst band error and the sampled
    error profile k(phi) - 1."""

    phi_a: float
    phi_b: float
    max_error: float
    profile_lats: np.ndarray
    profile_errors: np.ndarray


def parallel_scale(constants: ConicConstants, phi_a: float, phi: float) -> float:
    """Scale along the parallel at phi for the conic whose inner standard
    parallel is phi_a; exactly 1 at both standard parallels."""
    rho = constants.rho_ref + phi_a - phi
    if rho <= RHO_MIN:
        raise DomainError(
            f"latitude {math.degrees(phi):.4f}° lies at or beyond the cone apex"
        )
    return constants.n * rho / math.cos(phi)


def _error_scalar(phi_a: float, phi_b: float, phi: float) -> float:
    """k(phi) - 1 in closed form; hot-loop scalar twin of _error_profile."""
    n = (math.cos(phi_a) - math.cos(phi_b)) / (phi_b - phi_a)
    return (math.cos(phi_a) + n * (phi_a - phi)) / math.cos(phi) - 1.0


def _error_profile(phi_a: float, phi_b: float, lats: np.ndarray) -> np.ndarray:
    n = (math.cos(phi_a) - math.cos(phi_b)) / (phi_b - phi_a)
    return (math.cos(phi_a) + n * (phi_a - lats)) / np.cos(lats) - 1.0


def _golden_min(f, lo: float, hi: float, tol: float) -> tuple[float, float]:
    """Golden-section minimum of a unimodal f on [lo, hi]."""
    x1 = hi - _INV_GOLDEN * (hi - lo)
    x2 = lo + _INV_GOLDEN * (hi - lo)
    f1, f2 = f(x1), f(x2)
    while hi - lo > tol:
        if f1 < f2:
            hi, x2, f2 = x2, x1, f1
            x1 = hi - _INV_GOLDEN * (hi - lo)
            f1 = f(x1)
        else:
            lo, x1, f1 = x1, x2, f2
            x2 = lo + _INV_GOLDEN * (hi - lo)
            f2 = f(x2)
    xm = 0.5 * (lo + hi)
    return xm, f(xm)


def _dip_magnitude(phi_a: float, phi_b: float) -> float:
    """Depth of the interior shortfall of k below 1. The dip is unique: the
    radius ray decreases strictly slower than cot(phi), so k has exactly one
    interior critical point between the standard parallels."""
    _, value = _golden_min(
        lambda phi: _error_scalar(phi_a, phi_b, phi), phi_a, phi_b, 1e-13
    )
    return max(0.0, -value)


def band_max_error(
    phi_a: float, phi_b: float, band: LatBand, npts: int = SCAN_POINTS
) -> float:
    """max |k(phi) - 1| over the band: dense scan plus golden refinement of
    the extremum around the scan argmax."""
    lats = np.linspace(band.phi_lo, band.phi_hi, npts)
    err = np.abs(_error_profile(phi_a, phi_b, lats))
    i = int(err.argmax())
    worst = float(err[i])
    if 0 < i < npts - 1:
        _, neg = _golden_min(
            lambda phi: -abs(_error_scalar(phi_a, phi_b, phi)),
            float(lats[i - 1]), float(lats[i + 1]), 1e-13,
        )
        worst = max(worst, -neg)
    return float(worst)


def quarter_rule(band: LatBand, npts: int = SCAN_POINTS) -> ParallelChoice:
    """Parallels at one quarter of the band width in from each edge, i.e.
    equally far from the middle parallel and from the outermost edges."""
    quarter = 0.25 * band.width
    phi_a = band.phi_lo + quarter
    phi_b = band.phi_hi - quarter
    lats = np.linspace(band.phi_lo, band.phi_hi, npts)
    return ParallelChoice(
        phi_a=phi_a, phi_b=phi_b,
        max_error=band_max_error(phi_a, phi_b, band, npts),
        profile_lats=lats,
        profile_errors=_error_profile(phi_a, phi_b, lats),
    )


def _bisect(g, lo: float, hi: float, tol: float, what: str):
    """Root of g by bisection; g(lo) and g(hi) must differ in sign."""
    g_lo = g(lo)
    g_hi = g(hi)
    if g_lo == 0.0:
        return lo
    if g_hi == 0.0:
        return hi
    if (g_lo > 0.0) == (g_hi > 0.0):
        raise ConvergenceError(f"no sign change bracketing the {what} balance")
    for _ in range(MAX_BISECT_STEPS):
        mid = 0.5 * (lo + hi)
        if hi - lo <= tol:
            return mid
        g_mid = g(mid)
        if g_mid == 0.0:
            return mid
        if (g_mid > 0.0) == (g_lo > 0.0):
            lo, g_lo = mid, g_mid
        else:
            hi, g_hi = mid, g_mid
    raise ConvergenceError(f"{what} balance did not converge in {MAX_BISECT_STEPS} steps")


def minimax_parallels(band: LatBand, tol: float = DEFAULT_TOL) -> ParallelChoice:
    """Parallels minimizing the worst |k - 1| over the band.

    Nested bisection on the equioscillation balances (see module docstring):
    inner loop fixes phi_a and balances the upper-edge error against the
    interior dip; outer loop balances the two edge errors. ``tol`` bounds the
    bisection interval on the parallel positions. A failed bracket raises
    :class:`ConvergenceError` with the quarter-rule fallback attached.
    """
    if tol <= 0.0:
        raise ParameterError("tol must be positive")
    margin = max(band.width * 1e-9, 1e-15)
    lo, hi = band.phi_lo, band.phi_hi
    pos_tol = min(tol, 0.05 * band.width)

    def outer_for(phi_a: float) -> float:
        """phi_b balancing the upper-edge error against the dip."""
        def gap(phi_b: float) -> float:
            return _error_scalar(phi_a, phi_b, hi) - _dip_magnitude(phi_a, phi_b)
        return _bisect(gap, phi_a + margin, hi - margin, pos_tol, "edge/dip")

    def edge_gap(phi_a: float) -> float:
        phi_b = outer_for(phi_a)
        return (_error_scalar(phi_a, phi_b, lo) - _error_scalar(phi_a, phi_b, hi))

    try:
        # the optimal inner parallel sits below the band midpoint; expand the
        # bracket toward the top edge only if a band ever needs it
        upper = 0.5 * (lo + hi)
        for _ in range(MAX_BISECT_STEPS):
            if edge_gap(upper) > 0.0:
                break
            upper = hi - 0.5 * (hi - upper)
        else:
            raise ConvergenceError("could not bracket the edge/edge balance")
        phi_a = _bisect(edge_gap, lo + margin, upper, pos_tol, "edge/edge")
        phi_b = outer_for(phi_a)
    except ConvergenceError as exc:
        # hair-thin bands drown the balance equations in the cancellation
        # noise of the cone constant; every interior choice is equivalent
        # there, so fall back to the quarter rule
        if band.width <= 1e-4:
            return quarter_rule(band)
        raise ConvergenceError(str(exc), best=quarter_rule(band)) from exc

    lats = np.linspace(lo, hi, SCAN_POINTS)
    return ParallelChoice(
        phi_a=phi_a, phi_b=phi_b,
        max_error=band_max_error(phi_a, phi_b, band),
        profile_lats=lats,
        profile_errors=_error_profile(phi_a, phi_b, lats),
    )


def equioscillation_residual(band: LatBand, choice: ParallelChoice) -> float:
    """How far a choice is from a true equioscillating optimum.

    Evaluates the error magnitude at the three extremal latitudes (both band
    edges, where k - 1 is positive, and the interior dip, where it is
    negative) and returns the largest deviation from the reported max_error.
    """
    magnitudes = (
        _error_scalar(choice.phi_a, choice.phi_b, band.phi_lo),
        _error_scalar(choice.phi_a, choice.phi_b, band.phi_hi),
        _dip_magnitude(choice.phi_a, choice.phi_b),
    )
    return float(max(abs(m - choice.max_error) for m in magnitudes))


def apex_overshoot_degrees(phi_a: float, phi_b: float) -> float:
    """Distance of the meridian convergence point beyond the pole, degrees."""
    return math.degrees(conic_constants(phi_a, phi_b).apex_overshoot)


def semicircle_longitude_span(phi_a: float, phi_b: float) -> float:
    """Longitude degrees spanned by a half-circle of parallels on the map:
    180/n, always more than 180 since the cone constant is below 1."""
    return 180.0 / conic_constants(phi_a, phi_b).n

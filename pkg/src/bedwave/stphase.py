"""Stationary-phase asymptotics of the surface for finite depth ratio.

Along a ray x = X t the oscillatory wavenumber integral is dominated by the
stationary point xi0 of the phase sqrt(tau(xi)) + (X - C) xi.  Because
d/dxi sqrt(tau) decreases strictly from 1 to 0 on (0, inf) (and from 0 to
-1 on the negative axis), exactly one xi0 exists iff X - C lies in
(-1, 0) or (0, 1): on the positive half-line for X - C in (-1, 0), on the
negative one otherwise.  The leading-order value is

    f(x,t) ~ -sqrt(2 pi tau(xi0)) / [cosh(delta xi0) sqrt(t |d2|)]
             * Im( exp(i (t (sqrt(tau(xi0)) + (X - C) xi0) - pi/4))
                   * htilde(xi0, omega0) ),

with omega0 = sqrt(tau(xi0)) - C xi0, d2 the second derivative of
sqrt(tau) at xi0, and htilde the regularized space-time bed spectrum.  The
approximation needs t |d2| >> 1; "much greater" is operationalized as the
configurable threshold 10.  The relaxed time condition t >= 1/delta is
reported but labelled dubious.
"""

from dataclasses import dataclass

import numpy as np

from .errors import NoStationaryPoint, NotApplicable
from .kernel import sech, sqrt_tau_derivs, tau

DEFAULT_APPLICABILITY = 10.0


@dataclass(frozen=True)
class StationaryPoint:
    """Stationary wavenumber of the ray phase and local curvature data."""

    xi0: float
    omega0: float
    curvature: float  # second derivative of sqrt(tau) at xi0; negative
    ray_slope: float
    residual: float

    def applicability(self, t):
        """t |d2|, the large parameter of the asymptotic expansion."""
        return t * abs(self.curvature)


def _solve_positive(target, delta):
    """xi > 0 with d/dxi sqrt(tau) = target, target in (0, 1).

    Bisection on the strictly decreasing derivative, then secant polish.
    """
    lo = 1e-12
    hi = 1.0
    while sqrt_tau_derivs(hi, delta).d1 > target:
        hi *= 4.0
        if hi > 1e18:  # derivative decays like 1/(2 sqrt(delta xi)); unreachable
            raise NoStationaryPoint("bracket growth failed")
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if sqrt_tau_derivs(mid, delta).d1 > target:
            lo = mid
        else:
            hi = mid
        if hi - lo <= 1e-16 * hi:
            break
    xi = 0.5 * (lo + hi)
    # Secant polish: two steps are enough after the bisection squeeze.
    f_xi = sqrt_tau_derivs(xi, delta).d1 - target
    xi_prev, f_prev = lo, sqrt_tau_derivs(lo, delta).d1 - target
    for _ in range(3):
        if f_xi == f_prev:
            break
        step = f_xi * (xi - xi_prev) / (f_xi - f_prev)
        xi_prev, f_prev = xi, f_xi
        xi = xi - step
        f_xi = sqrt_tau_derivs(xi, delta).d1 - target
    return xi


def find_stationary_point(ray_slope, nd):
    """Stationary wavenumber for the ray x/t = ray_slope.

    Requires ray_slope - C in (-1, 0) or (0, 1); raises NoStationaryPoint
    otherwise.  The root is unique on its half-line by strict monotonicity
    and is polished to residual <= 1e-12.
    """
    target = nd.C - ray_slope  # = d/dxi sqrt(tau) at the stationary point
    if not 0.0 < abs(target) < 1.0:
        raise NoStationaryPoint(
            f"ray slope minus drift must lie in (-1,0) or (0,1), got {ray_slope - nd.C}"
        )
    xi_pos = _solve_positive(abs(target), nd.delta)
    xi0 = xi_pos if target > 0 else -xi_pos
    sample = sqrt_tau_derivs(xi0, nd.delta)
    residual = abs(sample.d1 + ray_slope - nd.C)
    if residual > 1e-12:
        raise NoStationaryPoint(f"root polish stalled at residual {residual:.3e}")
    return StationaryPoint(
        xi0=float(xi0),
        omega0=float(sample.sqrt_tau - nd.C * xi0),
        curvature=float(sample.d2),
        ray_slope=float(ray_slope),
        residual=float(residual),
    )


@dataclass(frozen=True)
class AsymptoticValue:
    """Leading-order surface value split into envelope and carrier."""

    value: float
    envelope: float
    phase: float
    point: StationaryPoint
    applicability: float


def asymptotic_components(x, t, bed, nd, min_applicability=DEFAULT_APPLICABILITY):
    """Evaluate the stationary-phase value at (x, t) with its envelope.

    Raises NotApplicable (reporting the measured t |d2|) below the
    threshold and propagates NoStationaryPoint for inadmissible rays.
    """
    if t <= 0:
        raise NoStationaryPoint("ray slope undefined for t <= 0")
    sp = find_stationary_point(x / t, nd)
    app = sp.applicability(t)
    if app < min_applicability:
        raise NotApplicable(
            f"t*|d2| = {app:.3g} below threshold {min_applicability:g}"
        )
    htilde = bed.spacetime_spectrum(sp.xi0, sp.omega0)
    tau0 = tau(sp.xi0, nd.delta)
    prefactor = (
        -np.sqrt(2.0 * np.pi * tau0)
        * sech(nd.delta * sp.xi0)
        / np.sqrt(t * abs(sp.curvature))
    )
    phase = t * (np.sqrt(tau0) + (sp.ray_slope - nd.C) * sp.xi0) - np.pi / 4.0
    value = prefactor * float(np.imag(np.exp(1j * phase) * htilde))
    return AsymptoticValue(
        value=float(value),
        envelope=float(abs(prefactor) * abs(htilde)),
        phase=float(phase),
        point=sp,
        applicability=float(app),
    )


def asymptotic_surface(x, t, bed, nd, min_applicability=DEFAULT_APPLICABILITY):
    """Leading-order surface value at (x, t); see asymptotic_components."""
    return asymptotic_components(x, t, bed, nd, min_applicability).value


@dataclass(frozen=True)
class ApplicabilityReport:
    """How far (x/t, t) sits inside the asymptotic regime.

    The strict time condition is t >= 1/delta^2; the relaxed t >= 1/delta is
    reported with quality "dubious" because it weakens the expansion's large
    parameter.  Physical equivalents use T = lambda t / sqrt(g d).
    """

    applicability: float
    threshold: float
    applicable: bool
    strict_time: float
    relaxed_time: float
    meets_strict: bool
    meets_relaxed: bool
    relaxed_quality: str
    physical_time: float
    physical_strict: float
    physical_relaxed: float


def applicability_report(t, sp, nd, phys, threshold=DEFAULT_APPLICABILITY):
    """Report t |d2| against the threshold plus both time conditions."""
    app = sp.applicability(t)
    strict_time = 1.0 / nd.delta**2
    relaxed_time = 1.0 / nd.delta
    scale = phys.time_scale
    return ApplicabilityReport(
        applicability=float(app),
        threshold=float(threshold),
        applicable=bool(app >= threshold),
        strict_time=strict_time,
        relaxed_time=relaxed_time,
        meets_strict=bool(t >= strict_time),
        meets_relaxed=bool(t >= relaxed_time),
        relaxed_quality="dubious",
        physical_time=float(t * scale),
        physical_strict=float(strict_time * scale),
        physical_relaxed=float(relaxed_time * scale),
    )

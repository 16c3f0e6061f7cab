"""Closed-form surface displacement in the long-wave limit delta -> 0.

In that limit the evolution collapses to a forced wave problem whose
solution is explicit.  For a separable bed a(t) b(x) the surface is

    f(x,t) = a(t) b(x)
           + 1/2 Int_0^t a(s) [b'(x - (t-s)(C-1)) - b'(x - (t-s)(C+1))] ds

and in the instantaneous-thrust limit (a -> Heaviside)

    f(x,t) = C^2/(C^2-1) b(x)
           + b(x - t(1+C)) / (2(1+C))
           + b(x + t(1-C)) / (2(1-C)),   t > 0.

The three coefficients sum to 1, so f -> b pointwise as t -> 0+.  The
stationary term is kept even though it is O(C^2); callers who want to drop
it can read it off WaveStructure.
"""

from dataclasses import dataclass

import numpy as np

from .errors import InputError, UnitCurrent, UnsupportedDerivative
from .quadrature import adaptive_gauss_kronrod


def _require_subcritical(C):
    if abs(C) >= 1.0:
        raise UnitCurrent(f"|C| must be < 1, got {C}")


@dataclass(frozen=True)
class WaveStructure:
    """Speeds, scales and support of the instantaneous-thrust solution."""

    stationary_coeff: float
    right_speed: float
    left_speed: float
    right_scale: float
    left_scale: float
    half_width: float
    C: float

    def support_radius(self, t):
        """Radius of the causal support at time t >= 0."""
        # 1 + |C| keeps the exact-zero guarantee for either drift direction;
        # identical to 1 + C for the usual C >= 0.
        return self.half_width + t * (1.0 + abs(self.C))


def wave_structure(bed, nd):
    """Structure constants of the instantaneous-thrust solution."""
    C = nd.C
    _require_subcritical(C)
    return WaveStructure(
        stationary_coeff=C * C / (C * C - 1.0),
        right_speed=1.0 + C,
        left_speed=1.0 - C,
        right_scale=1.0 / (2.0 * (1.0 + C)),
        left_scale=1.0 / (2.0 * (1.0 - C)),
        half_width=bed.half_width,
        C=C,
    )


def duhamel_surface(bed, nd, x, t, tol=1e-10):
    """Long-wave surface for a smooth ramp at a single point (x, t).

    Adaptive quadrature of the s-integral; breakpoints are inserted at the
    ramp end and wherever a characteristic crosses the support edge of b'.
    """
    C = nd.C
    _require_subcritical(C)
    if bed.instantaneous:
        raise UnsupportedDerivative(
            "duhamel_surface needs a smooth ramp; use instant_thrust_surface"
        )
    if t <= 0.0:
        return 0.0

    L = bed.half_width
    profile = bed.shape.profile

    def integrand(s):
        lag = t - s
        left_arg = x - lag * (C - 1.0)
        right_arg = x - lag * (C + 1.0)
        return bed.ramp(s, 0) * (profile(left_arg, L, 1) - profile(right_arg, L, 1))

    breaks = [bed.duration]
    for speed in (C - 1.0, C + 1.0):
        for edge in (-L, L):
            # characteristic x - (t - s) * speed crosses the support edge
            breaks.append(t - (x - edge) / speed)
    value, _ = adaptive_gauss_kronrod(integrand, 0.0, t, tol=tol, breakpoints=breaks)
    return float(bed.displacement(x, t) + 0.5 * value)


def instant_thrust_surface(bed, nd, x, t):
    """Long-wave surface for an instantaneous upward thrust of the bed.

    Treats the ramp as a Heaviside step regardless of bed.instantaneous;
    exact (no quadrature).  Returns 0 for t <= 0.
    """
    C = nd.C
    _require_subcritical(C)
    x = np.asarray(x, dtype=float)
    if t <= 0.0:
        out = np.zeros_like(x)
        return out if out.ndim else 0.0
    L = bed.half_width
    b = bed.shape.profile
    out = (
        C * C / (C * C - 1.0) * b(x, L, 0)
        + b(x - t * (1.0 + C), L, 0) / (2.0 * (1.0 + C))
        + b(x + t * (1.0 - C), L, 0) / (2.0 * (1.0 - C))
    )
    return out if np.ndim(out) else float(out)


def wavefront_bounds(bed, nd, t):
    """Interval outside which the instantaneous-thrust surface is exactly zero."""
    if t < 0:
        raise InputError(f"t must be >= 0, got {t}")
    r = wave_structure(bed, nd).support_radius(t)
    return (-r, r)

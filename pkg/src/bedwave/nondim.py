"""Scaling between dimensional sea/quake parameters and the dimensionless system.

The change of variables is X = lambda x, Y = d y, T = (lambda/sqrt(g d)) t,
F = a f, H = a h, which produces the dimensionless groups

    eps   = a / d            relative amplitude
    delta = d / lambda       relative depth
    alpha = A sqrt(d / g)    shear number
    beta  = B / sqrt(g d)    bed drift number
    C     = alpha + beta     surface drift

All operations here are pure value transformations.
"""

from dataclasses import dataclass, replace

import numpy as np

from .errors import NonPositiveParameter, UnitMismatch
from .series import SurfaceSeries


@dataclass(frozen=True)
class PhysicalParams:
    """Dimensional description of sea, quake and background current.

    Attributes
    ----------
    a : float
        Typical (perhaps maximal) bed/wave amplitude [m].
    d : float
        Mean depth [m].
    lam : float
        Typical wavelength [m].
    L : float
        Half-width of the moving bed region [m].
    t0 : float
        Duration of the quake [s].
    g : float
        Gravity [m/s^2]; explicit because the reported time scales depend
        on it.
    A : float
        Vorticity / shear of the background current [1/s].
    B : float
        Current speed at the bed [m/s].
    """

    a: float
    d: float
    lam: float
    L: float = 5.0e4
    t0: float = 100.0
    g: float = 9.81
    A: float = 0.0
    B: float = 0.0

    def __post_init__(self):
        for name in ("a", "d", "lam", "g", "L"):
            if getattr(self, name) <= 0:
                raise NonPositiveParameter(f"{name} must be > 0, got {getattr(self, name)}")
        if self.t0 < 0:
            raise NonPositiveParameter(f"t0 must be >= 0, got {self.t0}")

    @property
    def wave_speed(self):
        """Long-wave speed sqrt(g d) [m/s]."""
        return np.sqrt(self.g * self.d)

    @property
    def time_scale(self):
        """lambda / sqrt(g d) [s]; one unit of dimensionless time."""
        return self.lam / self.wave_speed


@dataclass(frozen=True)
class NondimParams:
    """The dimensionless group driving every formula.

    The surface drift C is derived as alpha + beta, so the identity
    C = alpha + beta holds exactly by construction.  source_half_width and
    quake_duration carry the dimensionless bed geometry produced by
    derive_nondim; they are None when the parameters were written down
    directly.
    """

    eps: float
    delta: float
    alpha: float = 0.0
    beta: float = 0.0
    source_half_width: float | None = None
    quake_duration: float | None = None

    def __post_init__(self):
        if self.eps <= 0:
            raise NonPositiveParameter(f"eps must be > 0, got {self.eps}")
        if self.delta <= 0:
            raise NonPositiveParameter(f"delta must be > 0, got {self.delta}")

    @property
    def C(self):
        """Dimensionless horizontal flow speed at the undisturbed surface."""
        return self.alpha + self.beta


def derive_nondim(phys):
    """Form the dimensionless parameters from a PhysicalParams.

    Returns a NondimParams with eps = a/d, delta = d/lambda, alpha =
    A sqrt(d/g), beta = B/sqrt(g d), plus the dimensionless source
    half-width L/lambda and quake duration t0 sqrt(g d)/lambda.
    """
    return NondimParams(
        eps=phys.a / phys.d,
        delta=phys.d / phys.lam,
        alpha=phys.A * np.sqrt(phys.d / phys.g),
        beta=phys.B / phys.wave_speed,
        source_half_width=phys.L / phys.lam,
        quake_duration=phys.t0 / phys.time_scale,
    )


@dataclass(frozen=True)
class RegimeReport:
    """Diagnostic flags and time scales for the modelling regime.

    sp_time_strict is lambda/(sqrt(g d) delta^2): the physical time after
    which the stationary-phase asymptotics are comfortably valid.
    sp_time_relaxed is lambda/(sqrt(g d) delta), the (dubious) relaxed
    variant.  Both in seconds.
    """

    eps: float
    delta: float
    C: float
    small_amplitude: bool
    shallow: bool
    subcritical_drift: bool
    sp_time_strict: float
    sp_time_relaxed: float
    eps_threshold: float
    delta_threshold: float


def validity_report(nd, phys, eps_threshold=0.01, delta_threshold=0.1):
    """Report whether (nd, phys) sit in the regime the formulas assume.

    The "<< 1" cutoffs have no canonical values; they are configuration with
    the stated defaults.
    """
    return RegimeReport(
        eps=nd.eps,
        delta=nd.delta,
        C=nd.C,
        small_amplitude=nd.eps < eps_threshold,
        shallow=nd.delta < delta_threshold,
        subcritical_drift=abs(nd.C) < 1.0,
        sp_time_strict=phys.time_scale / nd.delta**2,
        sp_time_relaxed=phys.time_scale / nd.delta,
        eps_threshold=eps_threshold,
        delta_threshold=delta_threshold,
    )


def to_physical(series, phys):
    """Map a dimensionless SurfaceSeries to physical units.

    X = lambda x, T = (lambda/sqrt(g d)) t, F = a f.
    """
    if series.units == "physical":
        raise UnitMismatch("series is already in physical units")
    meta = dict(series.meta)
    meta["units"] = "physical"
    return SurfaceSeries(
        times=series.times * phys.time_scale,
        x=series.x * phys.lam,
        f=series.f * phys.a,
        meta=meta,
    )


def to_nondim(series, phys):
    """Inverse of to_physical."""
    if series.units != "physical":
        raise UnitMismatch("series is already dimensionless")
    meta = dict(series.meta)
    meta["units"] = "nondim"
    return SurfaceSeries(
        times=series.times / phys.time_scale,
        x=series.x / phys.lam,
        f=series.f / phys.a,
        meta=meta,
    )


def with_delta(nd, delta):
    """Copy nd with a different relative depth (convergence ladders)."""
    return replace(nd, delta=delta)

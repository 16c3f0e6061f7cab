"""Seabed motion h(x,t) = a(t) b(x): profiles, ramp, spectra.

Transform conventions, fixed once for the whole package:

    spatial    bhat(xi)      = (1/sqrt(2 pi)) Int b(x) exp(-i xi x) dx
    space-time htilde(xi,w)  = bhat(xi) * atilde(w), each transform carrying
                               its own 1/sqrt(2 pi), i.e. 1/(2 pi) overall.

The ramp transform atilde is distributional because a(t) -> 1; it is
regularized through the compactly supported derivative:
atilde(w) = (transform of a')(w) / (i w), which is a proper integral over
[0, t0].  This drops the delta-mass at w = 0, so w = 0 is rejected.
"""

import math
from dataclasses import dataclass

import numpy as np
from scipy.interpolate import CubicSpline
from scipy.special import factorial2, spherical_jn

from .errors import InputError, UnsupportedDerivative, ValidationError, ZeroFrequency
from .kernel import sech
from .quadrature import panel_nodes


def _sinc(w):
    """sin(w)/w with the value 1 at 0."""
    return np.sinc(w / np.pi)


def _raised_cosine_profile(x, half_width, order, amplitude):
    """Raised-cosine lobe and derivatives, always array-valued."""
    x = np.asarray(x, dtype=float)
    u = x / half_width
    inside = np.abs(u) < 1.0
    pu = np.pi * u
    if order == 0:
        vals = 0.5 * (1.0 + np.cos(pu))
    elif order == 1:
        vals = -(np.pi / (2.0 * half_width)) * np.sin(pu)
    else:
        vals = -0.5 * (np.pi / half_width) ** 2 * np.cos(pu)
    return amplitude * np.where(inside, vals, 0.0)


def _raised_cosine_spectrum(xi, half_width, amplitude):
    # Hann-window three-sinc form: stable at the removable points z = 0, +-pi.
    z = np.asarray(xi, dtype=float) * half_width
    core = _sinc(z) + 0.5 * _sinc(np.pi - z) + 0.5 * _sinc(np.pi + z)
    return amplitude * half_width / np.sqrt(2.0 * np.pi) * core


@dataclass(frozen=True)
class RaisedCosine:
    """b(x) = amplitude * (1 + cos(pi x / L)) / 2 on |x| < L.

    C^1 across the support edge (b'' jumps there); evaluation at |x| = L
    returns the exterior value 0.
    """

    amplitude: float = 1.0

    def profile(self, x, half_width, order=0):
        out = _raised_cosine_profile(x, half_width, order, self.amplitude)
        return out if out.ndim else float(out)

    def spectrum(self, xi, half_width):
        out = _raised_cosine_spectrum(xi, half_width, self.amplitude)
        return out if out.ndim else float(out)

    def describe(self):
        return f"raised-cosine(amplitude={self.amplitude})"


@dataclass(frozen=True)
class SmoothBump:
    """b(x) = amplitude * (1 - (x/L)^2)^p on |x| < L, p >= 5 (C^(p-1) at the edge)."""

    order: int = 5
    amplitude: float = 1.0

    def __post_init__(self):
        if int(self.order) != self.order or self.order < 5:
            raise ValidationError(f"SmoothBump order must be an integer >= 5, got {self.order}")

    def profile(self, x, half_width, order=0):
        x = np.asarray(x, dtype=float)
        p = self.order
        u = x / half_width
        inside = np.abs(u) < 1.0
        u = np.where(inside, u, 0.0)
        w = 1.0 - u * u
        if order == 0:
            vals = w**p
        elif order == 1:
            vals = p * w ** (p - 1) * (-2.0 * u) / half_width
        else:
            vals = (4.0 * p * (p - 1) * u * u * w ** (p - 2) - 2.0 * p * w ** (p - 1)) / (
                half_width**2
            )
        out = self.amplitude * np.where(inside, vals, 0.0)
        return out if out.ndim else float(out)

    def spectrum(self, xi, half_width):
        # Int_{-1}^{1} (1-u^2)^p e^{-izu} du = p! 2^(p+1) j_p(z) / z^p with the
        # spherical Bessel function j_p; even in z.
        p = self.order
        z = np.abs(np.asarray(xi, dtype=float)) * half_width
        dfact = float(factorial2(2 * p + 1))
        small = z < 1e-3
        zs = np.where(small, 1.0, z)
        general = spherical_jn(p, zs) / zs**p
        z2 = z * z
        series = (1.0 - z2 / (2.0 * (2 * p + 3)) + z2 * z2 / (8.0 * (2 * p + 3) * (2 * p + 5))) / dfact
        core = np.where(small, series, general)
        coef = self.amplitude * half_width * math.factorial(p) * 2.0 ** (p + 1) / np.sqrt(2.0 * np.pi)
        out = coef * core
        return out if out.ndim else float(out)

    def describe(self):
        return f"smooth-bump(order={self.order}, amplitude={self.amplitude})"


@dataclass(frozen=True)
class Dipole:
    """Down-up pair: a negative lobe on [-L, 0] and a positive lobe on [0, L].

    Each lobe is a raised cosine of half-width L/2 centred at -+L/2, so the
    shape is odd with b(+L/2) = +amplitude.
    """

    amplitude: float = 1.0

    def profile(self, x, half_width, order=0):
        c = 0.5 * half_width
        x = np.asarray(x, dtype=float)
        out = _raised_cosine_profile(x - c, c, order, self.amplitude) - _raised_cosine_profile(
            x + c, c, order, self.amplitude
        )
        return out if out.ndim else float(out)

    def spectrum(self, xi, half_width):
        c = 0.5 * half_width
        xi = np.asarray(xi, dtype=float)
        out = -2.0j * np.sin(xi * c) * _raised_cosine_spectrum(xi, c, self.amplitude)
        return out if np.ndim(xi) else complex(out)

    def describe(self):
        return f"dipole(amplitude={self.amplitude})"


class Tabulated:
    """Shape given by samples (x_i, b_i), interpolated by a clamped cubic spline.

    b, b' and b'' are the exact derivatives of the spline; outside the sample
    range the shape is zero.  The spectrum is a dense zero-padded FFT of the
    spline (padding factor 16 >= 8) interpolated in xi, so it can be read at
    arbitrary off-grid wavenumbers.
    """

    def __init__(self, x, b):
        x = np.asarray(x, dtype=float)
        b = np.asarray(b, dtype=float)
        if x.ndim != 1 or x.size < 4 or x.shape != b.shape:
            raise ValidationError("Tabulated needs matching 1-D arrays with >= 4 samples")
        if np.any(np.diff(x) <= 0):
            raise ValidationError("Tabulated sample positions must be strictly increasing")
        self._spline = CubicSpline(x, b, bc_type="clamped")
        self.support = (float(x[0]), float(x[-1]))
        self.half_width = max(abs(self.support[0]), abs(self.support[1]))
        self._spectrum_interp = None

    @classmethod
    def from_file(cls, path):
        """Load from two-column plain text (x, b)."""
        data = np.loadtxt(path)
        if data.ndim != 2 or data.shape[1] != 2:
            raise ValidationError(f"{path}: expected two columns (x, b)")
        return cls(data[:, 0], data[:, 1])

    def profile(self, x, half_width, order=0):
        x = np.asarray(x, dtype=float)
        x0, x1 = self.support
        inside = (x >= x0) & (x <= x1)
        vals = self._spline(np.where(inside, x, x0), nu=order)
        out = np.where(inside, vals, 0.0)
        return out if out.ndim else float(out)

    def _build_spectrum(self):
        x0, x1 = self.support
        span = x1 - x0
        n_dense = 4096
        pad = 32
        dx = span / n_dense
        m = 1
        while m < pad * n_dense:
            m *= 2
        xg = x0 + dx * np.arange(m)
        bg = np.where(xg <= x1, self._spline(np.minimum(xg, x1)), 0.0)
        bg[xg > x1] = 0.0
        freqs = 2.0 * np.pi * np.fft.fftfreq(m, d=dx)
        vals = dx / np.sqrt(2.0 * np.pi) * np.exp(-1j * freqs * x0) * np.fft.fft(bg)
        order = np.argsort(freqs)
        grid = freqs[order]
        re = CubicSpline(grid, vals.real[order])
        im = CubicSpline(grid, vals.imag[order])
        self._spectrum_interp = (re, im, float(grid[-1]))

    def spectrum(self, xi, half_width):
        if self._spectrum_interp is None:
            self._build_spectrum()
        re, im, xi_max = self._spectrum_interp
        xi = np.asarray(xi, dtype=float)
        mag = np.abs(xi)
        covered = mag <= xi_max
        safe = np.where(covered, mag, 0.0)
        pos = re(safe) + 1j * im(safe)
        # Hermitian extension keeps bhat(-xi) == conj(bhat(xi)) exact.
        out = np.where(covered, np.where(xi >= 0, pos, np.conj(pos)), 0.0)
        return out if out.ndim else complex(out)

    def describe(self):
        return f"tabulated(support=[{self.support[0]:g}, {self.support[1]:g}])"


def _smoothstep(u):
    return u * u * u * (10.0 + u * (-15.0 + 6.0 * u))


@dataclass(frozen=True)
class BedMotion:
    """Separable bed displacement h(x, t) = a(t) b(x).

    The ramp a is the quintic smoothstep 10u^3 - 15u^4 + 6u^5, u = t/t0: it
    is 0 before the quake, 1 after, and C^2 at both junctions.  With
    instantaneous=True the ramp is the Heaviside step; only the shallow-water
    closed form accepts that limit, and time derivatives are refused.
    """

    shape: object
    half_width: float
    duration: float
    instantaneous: bool = False

    def __post_init__(self):
        if self.half_width <= 0:
            raise InputError(f"half_width must be > 0, got {self.half_width}")
        if not self.instantaneous and self.duration <= 0:
            raise InputError("a smooth ramp needs duration > 0 (or instantaneous=True)")
        if self.duration < 0:
            raise InputError(f"duration must be >= 0, got {self.duration}")
        intrinsic = getattr(self.shape, "half_width", None)
        if intrinsic is not None and not np.isclose(intrinsic, self.half_width):
            raise ValidationError(
                f"tabulated support half-width {intrinsic:g} != declared {self.half_width:g}"
            )

    # -- ramp -------------------------------------------------------------

    def ramp(self, t, order=0):
        """a(t) or a derivative; a(t)=0 for t<=0 and 1 for t>=t0."""
        if order not in (0, 1, 2):
            raise UnsupportedDerivative(f"ramp order must be 0, 1 or 2, got {order}")
        t = np.asarray(t, dtype=float)
        if self.instantaneous:
            if order:
                raise UnsupportedDerivative("instantaneous ramp has no classical derivatives")
            out = np.where(t > 0, 1.0, 0.0)
            return out if out.ndim else float(out)
        u = np.clip(t / self.duration, 0.0, 1.0)
        if order == 0:
            out = _smoothstep(u)
        elif order == 1:
            out = 30.0 * u * u * (1.0 - u) ** 2 / self.duration
        else:
            out = 60.0 * u * (1.0 - u) * (1.0 - 2.0 * u) / self.duration**2
        return out if out.ndim else float(out)

    def ramp_integral(self, t):
        """Int_0^t a(s) ds, closed form (the smoothstep integrates to t0/2)."""
        if self.instantaneous:
            return float(max(np.asarray(t, dtype=float), 0.0))
        t = np.asarray(t, dtype=float)
        u = np.clip(t / self.duration, 0.0, 1.0)
        ramp_part = self.duration * u**4 * (2.5 + u * (-3.0 + u))
        out = ramp_part + np.maximum(t - self.duration, 0.0)
        return out if out.ndim else float(out)

    # -- space ------------------------------------------------------------

    def displacement(self, x, t, dx=0, dt=0):
        """a^(dt)(t) * b^(dx)(x) for dx, dt in {0, 1, 2}."""
        if dx not in (0, 1, 2):
            raise UnsupportedDerivative(f"dx must be 0, 1 or 2, got {dx}")
        return self.ramp(t, dt) * self.shape.profile(x, self.half_width, dx)

    def shape_spectrum(self, xi):
        """bhat(xi) in the 1/sqrt(2 pi) convention."""
        return self.shape.spectrum(xi, self.half_width)

    # -- forcing ----------------------------------------------------------

    def forcing_spectrum(self, xi, s, nd):
        """Spatial spectrum of the forcing at time s:

            [a''(s) + 2 i C xi a'(s) - C^2 xi^2 a(s)] * bhat(xi) / cosh(delta xi)

        xi and s broadcast against each other.
        """
        if self.instantaneous:
            raise UnsupportedDerivative("forcing spectrum needs a differentiable ramp")
        xi = np.asarray(xi, dtype=float)
        C = nd.C
        bracket = (
            self.ramp(s, 2)
            + 2.0j * C * xi * self.ramp(s, 1)
            - (C * xi) ** 2 * self.ramp(s, 0)
        )
        out = bracket * self.shape_spectrum(xi) * sech(nd.delta * xi)
        return out if np.ndim(out) else complex(out)

    def ramp_transform(self, omega):
        """Regularized time transform atilde(omega) of the ramp.

        (1/(i w sqrt(2 pi))) Int_0^t0 a'(t) exp(-i w t) dt; proper because a'
        is supported on [0, t0].  Raises ZeroFrequency at w = 0 where the
        dropped delta-mass lives.
        """
        if self.instantaneous:
            raise UnsupportedDerivative("ramp transform needs a differentiable ramp")
        omega = np.asarray(omega, dtype=float)
        if np.any(omega == 0):
            raise ZeroFrequency("atilde is distributional at omega = 0")
        panels = 1 + int(np.max(np.abs(omega)) * self.duration / 6.0)
        nodes, weights = panel_nodes(0.0, self.duration, panels, order=24)
        moments = self.ramp(nodes, 1) * weights
        integral = np.exp(-1j * omega[..., None] * nodes) @ moments
        out = integral / (1j * omega * np.sqrt(2.0 * np.pi))
        return out if out.ndim else complex(out)

    def spacetime_spectrum(self, xi, omega):
        """htilde(xi, omega) = bhat(xi) * atilde(omega) (1/(2 pi) overall)."""
        return self.shape_spectrum(xi) * self.ramp_transform(omega)

    def describe(self):
        ramp = "heaviside" if self.instantaneous else f"smoothstep(t0={self.duration:g})"
        return f"{self.shape.describe()} L={self.half_width:g} ramp={ramp}"

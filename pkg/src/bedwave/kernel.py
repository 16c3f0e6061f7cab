"""Dispersion kernel, its derivatives, branches and the transfer function.

The kernel is

    tau(xi) = (xi / delta) * tanh(delta * xi)

so that sqrt(tau) is the intrinsic frequency of free modes when the
vorticity vanishes.  For general shear alpha the free modes are the roots
of the transfer-function denominator

    delta^2 Q^2 cosh(delta xi) - (delta xi + alpha delta Q) sinh(delta xi),
    Q = C xi + omega,

a quadratic in Q.  All hyperbolic expressions are rewritten through tanh
and exp(-2|z|) so nothing overflows for |delta xi| > 350; the raw cosh/sinh
forms appear only in tests at moderate arguments.
"""

from dataclasses import dataclass

import numpy as np

from .errors import DegenerateQuadratic, InputError, OnDispersionBranch, SingularSystem

# Switch to the tanh Taylor series below this |delta*xi|; both branches agree
# to ~1e-12 at the seam.
SERIES_CUTOFF = 1e-4

# Below this |xi| the one-sided limits of the sqrt(tau) derivatives are
# returned instead of the closed forms.
LIMIT_CUTOFF = 1e-12


def sech(z):
    """Overflow-safe 1/cosh(z)."""
    e = np.exp(-np.abs(z))
    return 2.0 * e / (1.0 + e * e)


def tau(xi, delta):
    """Dispersion kernel (xi/delta)*tanh(delta*xi); even, >= 0, zero only at 0.

    For |delta*xi| < 1e-4 the series xi^2 (1 - (d xi)^2/3 + 2 (d xi)^4/15)
    is used instead of the ratio.
    """
    if delta <= 0:
        raise InputError("tau requires delta > 0")
    xi = np.asarray(xi, dtype=float)
    z = delta * xi
    z2 = z * z
    series = xi * xi * (1.0 - z2 / 3.0 + 2.0 * z2 * z2 / 15.0)
    general = xi * np.tanh(z) / delta
    out = np.where(np.abs(z) < SERIES_CUTOFF, series, general)
    return out if out.ndim else float(out)


def sqrt_tau(xi, delta):
    """sqrt(tau(xi)); the intrinsic frequency of a free mode at zero shear."""
    return np.sqrt(tau(xi, delta))


@dataclass
class DispersionSample:
    """Kernel values at a set of wavenumbers.

    d1 and d2 are the first and second derivative of sqrt(tau); d1 takes its
    one-sided limits +-1 at 0 and 0 at +-infinity, d2 is negative away from 0.
    """

    xi: np.ndarray
    tau: np.ndarray
    sqrt_tau: np.ndarray
    d1: np.ndarray
    d2: np.ndarray


def sqrt_tau_derivs(xi, delta):
    """Evaluate tau, sqrt(tau) and the derivatives of sqrt(tau).

    Closed forms (written tanh/sech-based so they survive |delta xi| > 350):

        d1 = (tanh z + z sech^2 z) / (2 delta sqrt(tau)),      z = delta xi
        d2 = -[(tanh z - z sech^2 z)^2 + 4 z^2 tanh^2 z sech^2 z]
             / (4 delta^2 tau^(3/2))

    For |xi| < 1e-12 the limits d1 -> sign(xi) (with +1 at xi = 0) and
    d2 -> 0 are returned.
    """
    if delta <= 0:
        raise InputError("sqrt_tau_derivs requires delta > 0")
    xi = np.asarray(xi, dtype=float)
    z = delta * xi
    th = np.tanh(z)
    s2 = sech(z) ** 2
    tv = tau(xi, delta)
    st = np.sqrt(tv)

    tiny = np.abs(xi) < LIMIT_CUTOFF
    safe_st = np.where(tiny, 1.0, st)

    tprime = (th + z * s2) / delta
    d1 = tprime / (2.0 * safe_st)
    d1 = np.where(tiny, np.where(xi < 0, -1.0, 1.0), d1)

    num2 = (th - z * s2) ** 2 + 4.0 * z * z * th * th * s2
    d2 = -num2 / (4.0 * delta * delta * safe_st**3)
    d2 = np.where(tiny, 0.0, d2)

    if xi.ndim == 0:
        return DispersionSample(float(xi), float(tv), float(st), float(d1), float(d2))
    return DispersionSample(xi, tv, st, d1, d2)


@dataclass
class BranchPair:
    """Frequencies where the transfer-function denominator vanishes.

    omega_plus is the root with the larger real part; for zero shear the pair
    reduces to -C xi +- sqrt(tau(xi)).
    """

    xi: np.ndarray
    omega_plus: np.ndarray
    omega_minus: np.ndarray


def branches(xi, nd):
    """Solve delta Q^2 cosh - (xi + alpha Q) sinh = 0 for the two branches.

    Scaling by cosh gives delta Q^2 - alpha T Q - xi T = 0 with T = tanh(delta
    xi), whose discriminant alpha^2 T^2 + 4 delta xi T is nonnegative because
    xi T >= 0.  The roots are paired stably (no subtractive cancellation) via
    the product Q+ Q- = -xi T / delta.
    """
    delta, alpha, C = nd.delta, nd.alpha, nd.C
    if delta <= 0:
        raise DegenerateQuadratic("leading coefficient delta*cosh vanishes only for delta <= 0")
    xi = np.asarray(xi, dtype=float)
    T = np.tanh(delta * xi)
    b = alpha * T
    xiT = xi * T  # >= 0 for every real xi
    disc = b * b + 4.0 * delta * xiT
    root = np.sqrt(disc)

    big = np.where(b >= 0, (b + root) / (2.0 * delta), (b - root) / (2.0 * delta))
    safe = np.where(big == 0.0, 1.0, big)
    other = np.where(big == 0.0, 0.0, (-xiT / delta) / safe)
    q_plus = np.maximum(big, other)
    q_minus = np.minimum(big, other)

    wp = q_plus - C * xi
    wm = q_minus - C * xi
    if xi.ndim == 0:
        return BranchPair(float(xi), float(wp), float(wm))
    return BranchPair(xi, wp, wm)


def dispersion_denominator(xi, omega, nd):
    """Transfer-function denominator divided by cosh(delta xi), plus its scale.

    Returns (value, scale) where value = delta^2 Q^2 - (delta xi +
    alpha delta Q) tanh(delta xi).  The scale is the sum of term magnitudes;
    |value| << scale signals a dispersion branch.
    """
    delta, alpha, C = nd.delta, nd.alpha, nd.C
    xi = np.asarray(xi, dtype=float)
    omega = np.asarray(omega, dtype=float)
    Q = C * xi + omega
    T = np.tanh(delta * xi)
    t_inertia = delta * delta * Q * Q
    t_restore = (delta * xi + alpha * delta * Q) * T
    value = t_inertia - t_restore
    scale = t_inertia + np.abs(t_restore) + np.finfo(float).tiny
    return value, scale


def transfer_function(xi, omega, nd):
    """Frequency-domain multiplier m with surface = m * bed in transforms.

        m = delta^2 Q (omega + beta xi) / [delta^2 Q^2 cosh - (delta xi +
            alpha delta Q) sinh],   Q = C xi + omega.

    Raises OnDispersionBranch when the denominator magnitude drops below
    1e-13 of its scale.
    """
    delta, beta, C = nd.delta, nd.beta, nd.C
    xi = np.asarray(xi, dtype=float)
    omega = np.asarray(omega, dtype=float)
    den, scale = dispersion_denominator(xi, omega, nd)
    if np.any(np.abs(den) < 1e-13 * scale):
        raise OnDispersionBranch("transfer function evaluated on a dispersion branch")
    Q = C * xi + omega
    num = delta * delta * Q * (omega + beta * xi) * sech(delta * xi)
    out = num / den
    return out if out.ndim else complex(out)


def stream_function_coefficients(xi, omega, h_tilde, nd):
    """Solve the two boundary conditions for the stream-function amplitudes.

    The transformed stream function is D1 exp(delta xi y) + D2 exp(-delta xi
    y); the bottom condition reads xi (D1 + D2) = -(omega + beta xi) h_tilde
    and the free-surface condition

        (xi + alpha Q)(D1 E + D2 / E) = delta Q^2 (D1 E - D2 / E),
        E = exp(delta xi).

    Intended for moderate |delta xi|; raises SingularSystem on a branch.
    """
    delta, alpha, beta, C = nd.delta, nd.alpha, nd.beta, nd.C
    if xi == 0:
        raise InputError("stream_function_coefficients requires xi != 0")
    Q = C * xi + omega
    E = np.exp(delta * xi)
    a00, a01 = xi, xi
    a10 = (xi + alpha * Q - delta * Q * Q) * E
    a11 = (xi + alpha * Q + delta * Q * Q) / E
    det = a00 * a11 - a01 * a10
    scale = abs(a00 * a11) + abs(a01 * a10) + np.finfo(float).tiny
    if abs(det) < 1e-13 * scale:
        raise SingularSystem("boundary-condition system is singular (dispersion branch)")
    rhs0 = -(omega + beta * xi) * h_tilde
    d1 = (rhs0 * a11) / det
    d2 = (-rhs0 * a10) / det
    return complex(d1), complex(d2)

"""Exception types shared across the package.

Two base classes split errors into bad input (CLI exit code 2) and
numerical procedures that could not reach their target (exit code 3).
"""


class InputError(ValueError):
    """Invalid parameters, units, preconditions or configuration."""


class NumericsError(RuntimeError):
    """A numerical procedure failed to reach its accuracy target."""


class NonPositiveParameter(InputError):
    """A physical scale that must be strictly positive is not."""


class UnitMismatch(InputError):
    """A series is already in the unit system it was asked to convert to."""


class UnsupportedDerivative(InputError):
    """Time derivative requested for an instantaneous (Heaviside) ramp."""


class ZeroFrequency(InputError):
    """The regularized time transform of the ramp is undefined at omega = 0."""


class UnitCurrent(InputError):
    """|C| >= 1: the drift speed reaches the long-wave speed."""


class VorticityUnsupported(InputError):
    """Time-domain evolution is only available for zero vorticity."""


class WouldWrap(InputError):
    """The causal support of the wave exceeds the periodic domain."""


class NoStationaryPoint(InputError):
    """The ray slope admits no stationary wavenumber."""


class InsufficientLadder(InputError):
    """A convergence study needs at least three ladder points."""


class ParseError(InputError):
    """Malformed scenario configuration text."""


class ValidationError(InputError):
    """Well-formed configuration violating a documented invariant."""


class QuadratureFailure(NumericsError):
    """Adaptive quadrature exhausted its budget above tolerance."""


class OnDispersionBranch(NumericsError):
    """Transfer function evaluated where its denominator vanishes."""


class DegenerateQuadratic(NumericsError):
    """Leading coefficient of the branch quadratic vanished (cannot occur for delta > 0)."""


class SingularSystem(NumericsError):
    """The 2x2 boundary-condition system is singular (on a dispersion branch)."""


class NotApplicable(NumericsError):
    """Asymptotic evaluation requested below its applicability threshold."""

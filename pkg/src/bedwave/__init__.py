"""bedwave: linear surface waves generated by seabed motion over a
constant-shear current.

Three mutually cross-checking routes to the free-surface displacement
f(x, t) at zero vorticity -- spectral evolution on a periodic grid, a slow
direct-quadrature oracle and long-wave closed forms -- plus stationary-phase
asymptotics and frequency-domain dispersion diagnostics valid for general
shear.
"""

__version__ = "0.1.0"

from . import errors
from .bed import BedMotion, Dipole, RaisedCosine, SmoothBump, Tabulated
from .evolve import SpectralGrid, evolve_surface, oracle_direct
from .kernel import (
    BranchPair,
    DispersionSample,
    branches,
    dispersion_denominator,
    sqrt_tau,
    sqrt_tau_derivs,
    stream_function_coefficients,
    tau,
    transfer_function,
)
from .nondim import (
    NondimParams,
    PhysicalParams,
    RegimeReport,
    derive_nondim,
    to_nondim,
    to_physical,
    validity_report,
)
from .series import SurfaceSeries
from .shallow import (
    WaveStructure,
    duhamel_surface,
    instant_thrust_surface,
    wave_structure,
    wavefront_bounds,
)
from .stphase import (
    ApplicabilityReport,
    AsymptoticValue,
    StationaryPoint,
    applicability_report,
    asymptotic_components,
    asymptotic_surface,
    find_stationary_point,
)

__all__ = [
    "__version__",
    "errors",
    "BedMotion",
    "RaisedCosine",
    "SmoothBump",
    "Dipole",
    "Tabulated",
    "SpectralGrid",
    "evolve_surface",
    "oracle_direct",
    "BranchPair",
    "DispersionSample",
    "branches",
    "dispersion_denominator",
    "sqrt_tau",
    "sqrt_tau_derivs",
    "stream_function_coefficients",
    "tau",
    "transfer_function",
    "NondimParams",
    "PhysicalParams",
    "RegimeReport",
    "derive_nondim",
    "to_nondim",
    "to_physical",
    "validity_report",
    "SurfaceSeries",
    "WaveStructure",
    "duhamel_surface",
    "instant_thrust_surface",
    "wave_structure",
    "wavefront_bounds",
    "ApplicabilityReport",
    "AsymptoticValue",
    "StationaryPoint",
    "applicability_report",
    "asymptotic_components",
    "asymptotic_surface",
    "find_stationary_point",
]

"""Scenario configuration: key=value sections, presets, validation.

The on-disk format is INI-style plain text with one section per concern:

    [scenario]
    preset = open-sea-2004        ; optional starting point

    [physical]
    a = 1.0
    d = 4000.0
    lambda = 200000.0
    g = 9.81
    A = 0.0
    B = 0.0
    L = 50000.0
    t0 = 100.0

    [bed]
    shape = raised-cosine         ; smooth-bump | dipole | tabulated
    amplitude = 1.0

    [grid]
    x_dom = 8.0
    n = 4096

    [run]
    solver = spectral             ; shallow-duhamel | shallow-instant |
                                  ; stationary-phase | dispersion
    times = 1.0, 2.5, 5.0

    [output]
    dir = out

Unknown sections or keys are rejected.  A missing gravity key defaults to
9.81 with a logged note.
"""

import configparser
import io
import logging
from dataclasses import dataclass, field, replace

from .bed import BedMotion, Dipole, RaisedCosine, SmoothBump, Tabulated
from .errors import ParseError, ValidationError
from .nondim import PhysicalParams, derive_nondim

log = logging.getLogger(__name__)

SOLVERS = (
    "spectral",
    "shallow-duhamel",
    "shallow-instant",
    "stationary-phase",
    "dispersion",
)

_KNOWN_KEYS = {
    "scenario": {"preset"},
    "physical": {"a", "d", "lambda", "g", "A", "B", "L", "t0"},
    "bed": {"shape", "amplitude", "order", "file"},
    "grid": {"x_dom", "n"},
    "run": {"solver", "times", "positions", "xi_max", "xi_count"},
    "output": {"dir"},
}

# Open-sea parameters typical of a large oceanic event: 1 m bed throw over a
# 4 km deep basin with 200 km waves; the source geometry (50 km half-width,
# 100 s duration) is a representative choice, not observational data.
PRESETS = {
    "open-sea-2004": {
        "physical": {
            "a": "1.0",
            "d": "4000.0",
            "lambda": "200000.0",
            "g": "9.81",
            "A": "0.0",
            "B": "0.0",
            "L": "50000.0",
            "t0": "100.0",
        },
        "bed": {"shape": "raised-cosine", "amplitude": "1.0"},
        "grid": {"x_dom": "8.0", "n": "4096"},
        "run": {"solver": "spectral", "times": "1.0, 2.5, 5.0"},
        "output": {"dir": "out"},
    }
}


@dataclass(frozen=True)
class ScenarioConfig:
    """Fully validated run description."""

    physical: PhysicalParams
    bed_shape: str
    bed_amplitude: float
    bed_order: int
    bed_file: str | None
    x_dom: float
    n: int
    solver: str
    times: tuple
    positions: tuple
    xi_max: float
    xi_count: int
    outdir: str
    preset: str | None = None
    gravity_defaulted: bool = field(default=False, compare=False)

    def nondim(self):
        return derive_nondim(self.physical)

    def bed_motion(self):
        """Instantiate the BedMotion in dimensionless variables."""
        nd = self.nondim()
        if self.bed_shape == "raised-cosine":
            shape = RaisedCosine(amplitude=self.bed_amplitude)
        elif self.bed_shape == "smooth-bump":
            shape = SmoothBump(order=self.bed_order, amplitude=self.bed_amplitude)
        elif self.bed_shape == "dipole":
            shape = Dipole(amplitude=self.bed_amplitude)
        else:
            shape = Tabulated.from_file(self.bed_file)
        instantaneous = self.solver == "shallow-instant"
        half_width = shape.half_width if self.bed_shape == "tabulated" else nd.source_half_width
        return BedMotion(
            shape=shape,
            half_width=half_width,
            duration=nd.quake_duration,
            instantaneous=instantaneous,
        )

    def grid(self):
        from .evolve import SpectralGrid

        return SpectralGrid(self.x_dom, self.n)


def _get_float(section, key, sec_name):
    raw = section[key]
    try:
        return float(raw)
    except ValueError as exc:
        raise ParseError(f"[{sec_name}] {key} = {raw!r} is not a number") from exc


def _get_floats(section, key, sec_name):
    raw = section[key]
    try:
        return tuple(float(tok) for tok in raw.replace(",", " ").split())
    except ValueError as exc:
        raise ParseError(f"[{sec_name}] {key} = {raw!r} is not a number list") from exc


def parse_config(text):
    """Parse configuration text into a validated ScenarioConfig."""
    parser = configparser.ConfigParser(inline_comment_prefixes=(";", "#"))
    try:
        parser.read_string(text)
    except configparser.Error as exc:
        raise ParseError(str(exc)) from exc

    preset_name = None
    if parser.has_section("scenario"):
        for key in parser["scenario"]:
            if key not in _KNOWN_KEYS["scenario"]:
                raise ValidationError(f"unknown key '{key}' in section [scenario]")
        preset_name = parser["scenario"].get("preset")
        if preset_name is not None and preset_name not in PRESETS:
            raise ValidationError(
                f"unknown preset {preset_name!r}; available: {sorted(PRESETS)}"
            )

    merged = {sec: dict(vals) for sec, vals in PRESETS.get(preset_name, {}).items()}
    for sec_name in parser.sections():
        if sec_name == "scenario":
            continue
        if sec_name not in _KNOWN_KEYS:
            raise ValidationError(f"unknown section [{sec_name}]")
        merged.setdefault(sec_name, {})
        for key, value in parser[sec_name].items():
            if key not in _KNOWN_KEYS[sec_name]:
                raise ValidationError(f"unknown key '{key}' in section [{sec_name}]")
            merged[sec_name][key] = value

    for required in ("physical", "run"):
        if required not in merged:
            raise ValidationError(f"missing section [{required}]")

    phys_sec = merged["physical"]
    for key in ("a", "d", "lambda"):
        if key not in phys_sec:
            raise ValidationError(f"missing key '{key}' in section [physical]")
    gravity_defaulted = "g" not in phys_sec
    if gravity_defaulted:
        log.info("no gravity key in [physical]; defaulting to 9.81 m/s^2")
    physical = PhysicalParams(
        a=_get_float(phys_sec, "a", "physical"),
        d=_get_float(phys_sec, "d", "physical"),
        lam=_get_float(phys_sec, "lambda", "physical"),
        L=_get_float(phys_sec, "L", "physical") if "L" in phys_sec else 5.0e4,
        t0=_get_float(phys_sec, "t0", "physical") if "t0" in phys_sec else 100.0,
        g=_get_float(phys_sec, "g", "physical") if not gravity_defaulted else 9.81,
        A=_get_float(phys_sec, "A", "physical") if "A" in phys_sec else 0.0,
        B=_get_float(phys_sec, "B", "physical") if "B" in phys_sec else 0.0,
    )

    bed_sec = merged.get("bed", {})
    bed_shape = bed_sec.get("shape", "raised-cosine")
    if bed_shape not in ("raised-cosine", "smooth-bump", "dipole", "tabulated"):
        raise ValidationError(f"unknown bed shape {bed_shape!r}")
    bed_file = bed_sec.get("file")
    if bed_shape == "tabulated" and not bed_file:
        raise ValidationError("bed shape 'tabulated' needs a 'file' key")

    grid_sec = merged.get("grid", {})
    run_sec = merged["run"]
    solver = run_sec.get("solver", "spectral")
    if solver not in SOLVERS:
        raise ValidationError(f"unknown solver {solver!r}; choose from {SOLVERS}")

    config = ScenarioConfig(
        physical=physical,
        bed_shape=bed_shape,
        bed_amplitude=_get_float(bed_sec, "amplitude", "bed") if "amplitude" in bed_sec else 1.0,
        bed_order=int(_get_float(bed_sec, "order", "bed")) if "order" in bed_sec else 5,
        bed_file=bed_file,
        x_dom=_get_float(grid_sec, "x_dom", "grid") if "x_dom" in grid_sec else 8.0,
        n=int(_get_float(grid_sec, "n", "grid")) if "n" in grid_sec else 4096,
        solver=solver,
        times=_get_floats(run_sec, "times", "run") if "times" in run_sec else (1.0, 2.5, 5.0),
        positions=_get_floats(run_sec, "positions", "run") if "positions" in run_sec else (),
        xi_max=_get_float(run_sec, "xi_max", "run") if "xi_max" in run_sec else 50.0,
        xi_count=int(_get_float(run_sec, "xi_count", "run")) if "xi_count" in run_sec else 200,
        outdir=merged.get("output", {}).get("dir", "out"),
        preset=preset_name,
        gravity_defaulted=gravity_defaulted,
    )
    validate_config(config)
    return config


def validate_config(config):
    """Check cross-field invariants; raises ValidationError."""
    nd = config.nondim()
    if config.solver == "spectral" and config.physical.A != 0.0:
        raise ValidationError(
            "solver 'spectral' requires zero vorticity (A = 0); "
            "use 'dispersion' for sheared currents"
        )
    if config.solver in ("spectral", "shallow-duhamel", "shallow-instant", "stationary-phase"):
        if abs(nd.C) >= 1.0:
            raise ValidationError(f"surface drift |C| = {abs(nd.C):g} must be < 1")
    if config.n < 4 or (config.n & (config.n - 1)) != 0:
        raise ValidationError(f"grid n must be a power of two >= 4, got {config.n}")
    if config.x_dom <= 0:
        raise ValidationError(f"x_dom must be > 0, got {config.x_dom}")
    if config.solver == "stationary-phase" and not config.positions:
        raise ValidationError("solver 'stationary-phase' needs a 'positions' key in [run]")
    if not config.times:
        raise ValidationError("at least one snapshot time is required")


def emit(config):
    """Serialize a ScenarioConfig back to configuration text.

    parse_config(emit(config)) reproduces the config (the preset is baked
    into explicit values).
    """
    parser = configparser.ConfigParser()
    phys = config.physical
    parser["physical"] = {
        "a": repr(phys.a),
        "d": repr(phys.d),
        "lambda": repr(phys.lam),
        "g": repr(phys.g),
        "A": repr(phys.A),
        "B": repr(phys.B),
        "L": repr(phys.L),
        "t0": repr(phys.t0),
    }
    bed = {"shape": config.bed_shape, "amplitude": repr(config.bed_amplitude)}
    if config.bed_shape == "smooth-bump":
        bed["order"] = str(config.bed_order)
    if config.bed_file:
        bed["file"] = config.bed_file
    parser["bed"] = bed
    parser["grid"] = {"x_dom": repr(config.x_dom), "n": str(config.n)}
    run = {
        "solver": config.solver,
        "times": ", ".join(repr(t) for t in config.times),
    }
    if config.positions:
        run["positions"] = ", ".join(repr(p) for p in config.positions)
    if config.solver == "dispersion":
        run["xi_max"] = repr(config.xi_max)
        run["xi_count"] = str(config.xi_count)
    parser["run"] = run
    parser["output"] = {"dir": config.outdir}
    buf = io.StringIO()
    parser.write(buf)
    return buf.getvalue()


def preset(name):
    """Load a named preset as a ScenarioConfig."""
    if name not in PRESETS:
        raise ValidationError(f"unknown preset {name!r}; available: {sorted(PRESETS)}")
    return parse_config(f"[scenario]\npreset = {name}\n")


def with_solver(config, solver):
    """Copy of config with a different solver (revalidated)."""
    new = replace(config, solver=solver)
    validate_config(new)
    return new

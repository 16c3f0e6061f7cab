"""Command-line orchestration: run solvers, emit CSV artifacts, studies.

Subcommands: params, simulate, shallow, stationary-phase, dispersion,
compare, converge.  Every run writes per-snapshot CSVs (columns x, f at
full double precision so independent implementations can diff them) plus a
plain-text metadata sidecar.  Exit codes: 0 success, 2 invalid input,
3 numerical failure.
"""

import argparse
import sys
import time
from pathlib import Path

import numpy as np

from . import __version__
from . import evolve, kernel, shallow, stphase
from .errors import InputError, InsufficientLadder, NumericsError
from .nondim import validity_report, with_delta
from .scenario import SOLVERS, ScenarioConfig, parse_config, preset, with_solver

_FMT = "%.17g"


def _write_csv(path, header, rows):
    with open(path, "w") as fh:
        fh.write(",".join(header) + "\n")
        for row in rows:
            fh.write(",".join(_FMT % v for v in row) + "\n")
    return path


def _write_sidecar(outdir, config, solver, wall_time, extra=None):
    nd = config.nondim()
    lines = [
        f"tool_version = {__version__}",
        f"solver = {solver}",
        f"wall_time_s = {wall_time:.3f}",
        f"a = {config.physical.a!r}",
        f"d = {config.physical.d!r}",
        f"lambda = {config.physical.lam!r}",
        f"g = {config.physical.g!r}",
        f"A = {config.physical.A!r}",
        f"B = {config.physical.B!r}",
        f"L = {config.physical.L!r}",
        f"t0 = {config.physical.t0!r}",
        f"eps = {nd.eps!r}",
        f"delta = {nd.delta!r}",
        f"alpha = {nd.alpha!r}",
        f"beta = {nd.beta!r}",
        f"C = {nd.C!r}",
        f"bed = {config.bed_shape} amplitude={config.bed_amplitude!r}",
        f"grid_x_dom = {config.x_dom!r}",
        f"grid_n = {config.n}",
        f"times = {', '.join(repr(t) for t in config.times)}",
    ]
    for key, value in (extra or {}).items():
        lines.append(f"{key} = {value}")
    path = Path(outdir) / "run_metadata.txt"
    path.write_text("\n".join(lines) + "\n")
    return path


def _snapshot_paths(outdir, times):
    return [Path(outdir) / f"surface_{i:03d}.csv" for i in range(len(times))]


def run(config):
    """Execute the configured solver; returns the list of written paths."""
    outdir = Path(config.outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    start = time.perf_counter()
    nd = config.nondim()
    bed = config.bed_motion()
    written = []

    if config.solver == "spectral":
        series = evolve.evolve_surface(bed, nd, config.grid(), config.times)
        for path, row in zip(_snapshot_paths(outdir, series.times), series.f):
            written.append(_write_csv(path, ("x", "f"), zip(series.x, row)))
        extra = {"max_imag_residue": repr(series.meta["max_imag_residue"])}
    elif config.solver in ("shallow-duhamel", "shallow-instant"):
        x = config.grid().x
        for path, t in zip(_snapshot_paths(outdir, config.times), config.times):
            if config.solver == "shallow-instant":
                f = shallow.instant_thrust_surface(bed, nd, x, t)
            else:
                f = np.array([shallow.duhamel_surface(bed, nd, xi_, t) for xi_ in x])
            written.append(_write_csv(path, ("x", "f"), zip(x, f)))
        extra = None
    elif config.solver == "stationary-phase":
        rows = []
        for t in config.times:
            for x in config.positions:
                parts = stphase.asymptotic_components(x, t, bed, nd)
                rows.append((x, t, parts.value, parts.envelope, parts.applicability))
        path = outdir / "stationary_phase.csv"
        written.append(
            _write_csv(path, ("x", "t", "f", "envelope", "applicability"), rows)
        )
        extra = None
    elif config.solver == "dispersion":
        xi = np.linspace(-config.xi_max, config.xi_max, config.xi_count)
        xi = xi[xi != 0.0]
        pair = kernel.branches(xi, nd)
        path = outdir / "dispersion.csv"
        written.append(
            _write_csv(
                path,
                ("xi", "omega_plus", "omega_minus"),
                zip(pair.xi, pair.omega_plus, pair.omega_minus),
            )
        )
        extra = None
    else:  # pragma: no cover - scenario validation rejects unknown solvers
        raise InputError(f"unknown solver {config.solver!r}")

    written.append(
        _write_sidecar(outdir, config, config.solver, time.perf_counter() - start, extra)
    )
    return written


def compare_solvers(config):
    """Max-norm gap between the spectral run and the long-wave closed form.

    Returns a list of (t, max_abs_error) rows.
    """
    nd = config.nondim()
    bed = config.bed_motion()
    grid = config.grid()
    series = evolve.evolve_surface(bed, nd, grid, config.times)
    rows = []
    for t, f_spec in zip(series.times, series.f):
        f_shal = np.array([shallow.duhamel_surface(bed, nd, x, t) for x in grid.x])
        rows.append((float(t), float(np.max(np.abs(f_spec - f_shal)))))
    return rows


def convergence_study(config, ladder, kind="delta"):
    """Error ladder plus fitted empirical order (log-log least squares).

    kind="delta": spectral runs at each depth ratio against the long-wave
    closed form at the last snapshot time.  kind="n": successive grid
    refinements of the spectral run, error between consecutive resolutions.
    """
    ladder = list(ladder)
    if len(ladder) < 3:
        raise InsufficientLadder(f"need >= 3 ladder points, got {len(ladder)}")
    diffs = np.diff(ladder)
    if not (np.all(diffs > 0) or np.all(diffs < 0)):
        raise InsufficientLadder("ladder must be strictly monotone")

    bed = config.bed_motion()
    t = config.times[-1]
    rows = []
    if kind == "delta":
        nd0 = config.nondim()
        grid = config.grid()
        f_ref = np.array([shallow.duhamel_surface(bed, nd0, x, t) for x in grid.x])
        for delta in ladder:
            nd = with_delta(nd0, delta)
            series = evolve.evolve_surface(bed, nd, grid, [t])
            rows.append((float(delta), float(np.max(np.abs(series.f[0] - f_ref)))))
        logs = np.log([r[0] for r in rows])
        errs = np.log([max(r[1], 1e-300) for r in rows])
        order = float(np.polyfit(logs, errs, 1)[0])
    elif kind == "n":
        nd = config.nondim()
        fields = []
        for n in ladder:
            grid = evolve.SpectralGrid(config.x_dom, int(n))
            series = evolve.evolve_surface(bed, nd, grid, [t])
            fields.append((int(n), grid, series.f[0]))
        for (n_a, g_a, f_a), (n_b, g_b, f_b) in zip(fields[:-1], fields[1:]):
            stride = g_b.n // g_a.n if g_b.n > g_a.n else 1
            gap = np.max(np.abs(f_b[::stride] - f_a)) if g_b.n > g_a.n else np.max(
                np.abs(f_a[:: g_a.n // g_b.n] - f_b)
            )
            rows.append((float(n_b), float(gap)))
        order = float("nan")
    else:
        raise InputError(f"kind must be 'delta' or 'n', got {kind!r}")
    return {"kind": kind, "rows": rows, "order": order}


# ---------------------------------------------------------------------------
# argparse front end
# ---------------------------------------------------------------------------


def _load_config(args):
    if args.config:
        return parse_config(Path(args.config).read_text())
    return preset(args.preset)


def _add_common(sub):
    group = sub.add_mutually_exclusive_group(required=True)
    group.add_argument("-c", "--config", help="path to a scenario configuration file")
    group.add_argument("--preset", help="named preset, e.g. open-sea-2004")
    sub.add_argument("-o", "--outdir", help="output directory (overrides config)")


def _finalize(config, args, solver=None):
    from dataclasses import replace

    if args.outdir:
        config = replace(config, outdir=args.outdir)
    if solver and config.solver != solver:
        config = with_solver(config, solver)
    return config


def build_parser():
    parser = argparse.ArgumentParser(
        prog="bedwave",
        description="Surface waves generated by seabed motion over a sheared current.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("params", help="print dimensionless parameters and regime flags")
    _add_common(p)

    p = sub.add_parser("simulate", help="spectral evolution run (zero vorticity)")
    _add_common(p)

    p = sub.add_parser("shallow", help="long-wave closed-form run")
    _add_common(p)
    p.add_argument(
        "--variant",
        choices=("duhamel", "instant"),
        default="instant",
        help="smooth-ramp integral or instantaneous thrust",
    )

    p = sub.add_parser("stationary-phase", help="asymptotic evaluation along rays")
    _add_common(p)

    p = sub.add_parser("dispersion", help="branch table over a wavenumber ladder")
    _add_common(p)

    p = sub.add_parser("compare", help="spectral vs long-wave max-norm error table")
    _add_common(p)

    p = sub.add_parser("converge", help="convergence study over a ladder")
    _add_common(p)
    p.add_argument("--kind", choices=("delta", "n"), default="delta")
    p.add_argument(
        "--ladder",
        required=True,
        help="comma-separated ladder values, e.g. 0.05,0.025,0.0125",
    )

    return parser


def _cmd_params(config):
    nd = config.nondim()
    report = validity_report(nd, config.physical)
    print(f"eps = {nd.eps:.6g}  (small-amplitude: {report.small_amplitude})")
    print(f"delta = {nd.delta:.6g}  (shallow: {report.shallow})")
    print(f"alpha = {nd.alpha:.6g}  beta = {nd.beta:.6g}  C = {nd.C:.6g}"
          f"  (subcritical: {report.subcritical_drift})")
    print(f"source half-width L = {nd.source_half_width:.6g}, duration t0 = {nd.quake_duration:.6g}")
    print(f"stationary-phase strict time  T1 = {report.sp_time_strict:.4g} s")
    print(f"stationary-phase relaxed time T2 = {report.sp_time_relaxed:.4g} s (dubious)")
    return 0


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        config = _load_config(args)
        if args.command == "params":
            config = _finalize(config, args)
            return _cmd_params(config)
        if args.command == "simulate":
            config = _finalize(config, args, solver="spectral")
            paths = run(config)
        elif args.command == "shallow":
            solver = "shallow-instant" if args.variant == "instant" else "shallow-duhamel"
            config = _finalize(config, args, solver=solver)
            paths = run(config)
        elif args.command == "stationary-phase":
            config = _finalize(config, args, solver="stationary-phase")
            paths = run(config)
        elif args.command == "dispersion":
            config = _finalize(config, args, solver="dispersion")
            paths = run(config)
        elif args.command == "compare":
            config = _finalize(config, args)
            rows = compare_solvers(config)
            outdir = Path(config.outdir)
            outdir.mkdir(parents=True, exist_ok=True)
            paths = [_write_csv(outdir / "compare.csv", ("t", "max_abs_error"), rows)]
        elif args.command == "converge":
            config = _finalize(config, args)
            ladder = [float(tok) for tok in args.ladder.split(",")]
            report = convergence_study(config, ladder, kind=args.kind)
            outdir = Path(config.outdir)
            outdir.mkdir(parents=True, exist_ok=True)
            label = "delta" if args.kind == "delta" else "n"
            paths = [
                _write_csv(outdir / "convergence.csv", (label, "error"), report["rows"])
            ]
            print(f"fitted order: {report['order']:.3f}")
        for path in paths:
            print(path)
        return 0
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except NumericsError as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())

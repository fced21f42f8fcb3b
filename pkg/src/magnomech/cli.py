"""Command-line interface: run sweeps, figure presets and point checks.

Subcommands::

    run <config>                 run the configured sweep, emit the table
    figure <id> [--out DIR]      run a shipped figure preset (fig2..fig8)
    wigner <config> --mode M     emit one Wigner grid (CSV) + contour (JSON)
    check <config>               stability + physicality of the base point

Exit codes: 0 success with no assumed parameters, 3 success where any
assumed parameter was used, 1 configuration error, 2 runtime or
numerical error.  The output directory defaults to the MAGNOMECH_OUT
environment variable, then to the current directory.
"""

import argparse
import os
import sys

from . import __version__
from .config import parse_config
from .emit import FORMATS, emit, provenance_lines
from .errors import ConfigError, MagnomechError
from .gaussian import MODE_LABELS, reduce, symplectic_eigenvalues
from .presets import FIGURE_IDS, figure_preset
from .sweep import apply_sweep_value, run_sweep, solve_covariance
from .wigner import contour_json, grid_csv, wigner_grid

EXIT_OK = 0
EXIT_CONFIG = 1
EXIT_RUNTIME = 2
EXIT_ASSUMED = 3


def _parser():
    parser = argparse.ArgumentParser(
        prog="magnomech",
        description="steady-state entanglement and nonreciprocity in a "
                    "four-mode cavity magnomechanical system")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", default=None,
                        help="output directory (default: $MAGNOMECH_OUT or .)")
    common.add_argument("--format", choices=FORMATS, default="csv",
                        help="sweep table format (default csv)")
    common.add_argument("--threads", type=int, default=1,
                        help="worker threads for sweep grid points")
    common.add_argument("--seed", type=int, default=None,
                        help="seed for randomized test corpora (unused by sweeps)")

    p_run = sub.add_parser("run", parents=[common],
                           help="run the sweep defined in a config file")
    p_run.add_argument("config")

    p_fig = sub.add_parser("figure", parents=[common],
                           help="run a shipped figure preset")
    p_fig.add_argument("id", metavar="id",
                       help=f"one of {', '.join(FIGURE_IDS)}")

    p_wig = sub.add_parser("wigner", parents=[common],
                           help="emit a single-mode Wigner grid")
    p_wig.add_argument("config")
    p_wig.add_argument("--mode", required=True, choices=MODE_LABELS)
    p_wig.add_argument("--resolution", type=int, default=201)
    p_wig.add_argument("--half-range", type=float, default=5.0,
                       dest="half_range", help="half range in sigma units")

    p_chk = sub.add_parser("check", parents=[common],
                           help="stability and physicality of the base point")
    p_chk.add_argument("config")
    return parser


def _out_dir(args):
    return args.out or os.environ.get("MAGNOMECH_OUT") or "."


def _banner(params, provenance):
    for line in provenance_lines(params, provenance):
        print(f"# {line}")


def _exit_code(provenance):
    if provenance is not None and provenance.has_assumptions:
        return EXIT_ASSUMED
    return EXIT_OK


def _emit_wigner_grids(spec, out_dir, resolution=201, half_range=5.0):
    """One grid CSV + contour JSON per (grid point, requested mode)."""
    paths = []
    for idx, value in enumerate(spec.grid()):
        params = apply_sweep_value(spec.params, spec.parameter, value)
        _, _, _, report, C = solve_covariance(params)
        if not report.stable:
            print(f"# skipping unstable point {spec.label} p{idx:02d} "
                  f"({spec.parameter} = {value!r})")
            continue
        for mode in spec.wigner_modes:
            grid = wigner_grid(reduce(C, [mode]), half_range, resolution, mode)
            stem = os.path.join(out_dir, f"{spec.label}_p{idx:02d}_{mode}")
            with open(stem + ".csv", "w", encoding="utf-8", newline="\n") as fh:
                fh.write(grid_csv(grid))
            with open(stem + ".json", "w", encoding="utf-8", newline="\n") as fh:
                fh.write(contour_json(grid))
            paths += [stem + ".csv", stem + ".json"]
    return paths


def _cmd_run(args):
    parsed = parse_config(args.config)
    if parsed.sweep is None:
        raise ConfigError(f"{args.config}: no [sweep] section to run")
    _banner(parsed.params, parsed.provenance)
    out_dir = _out_dir(args)
    result = run_sweep(parsed.sweep, threads=args.threads)
    path = emit(result, args.format, out_dir)
    print(path)
    if parsed.sweep.wigner_modes:
        os.makedirs(out_dir, exist_ok=True)
        for p in _emit_wigner_grids(parsed.sweep, out_dir):
            print(p)
    return _exit_code(parsed.provenance)


def _cmd_figure(args):
    specs = figure_preset(args.id)
    out_dir = _out_dir(args)
    _banner(specs[0].params, specs[0].provenance)
    code = EXIT_OK
    for spec in specs:
        result = run_sweep(spec, threads=args.threads)
        print(emit(result, args.format, out_dir))
        if spec.wigner_modes:
            for p in _emit_wigner_grids(spec, out_dir):
                print(p)
        if spec.provenance is not None and spec.provenance.has_assumptions:
            code = EXIT_ASSUMED
    return code


def _cmd_wigner(args):
    parsed = parse_config(args.config)
    _, _, _, report, C = solve_covariance(parsed.params)
    if not report.stable:
        raise MagnomechError(
            f"base configuration is unstable (abscissa {report.abscissa:.3e}); "
            "no steady-state Wigner function exists")
    grid = wigner_grid(reduce(C, [args.mode]), args.half_range,
                       args.resolution, args.mode)
    out_dir = _out_dir(args)
    os.makedirs(out_dir, exist_ok=True)
    stem = os.path.join(out_dir, f"{parsed.label}_wigner_{args.mode}")
    with open(stem + ".csv", "w", encoding="utf-8", newline="\n") as fh:
        fh.write(grid_csv(grid))
    with open(stem + ".json", "w", encoding="utf-8", newline="\n") as fh:
        fh.write(contour_json(grid))
    print(stem + ".csv")
    print(stem + ".json")
    return _exit_code(parsed.provenance)


def _cmd_check(args):
    parsed = parse_config(args.config)
    _, A, _, report, C = solve_covariance(parsed.params)
    print(f"config: {parsed.label}")
    print(f"stable: {'yes' if report.stable else 'NO'} "
          f"(spectral abscissa {report.abscissa!r} rad/s"
          f"{', marginal' if report.marginal else ''})")
    if C is not None:
        nu_min = float(symplectic_eigenvalues(C).min())
        physical = nu_min >= 0.5 - 1e-9
        print(f"physical: {'yes' if physical else 'NO'} "
              f"(min symplectic eigenvalue {nu_min!r})")
    _banner(parsed.params, parsed.provenance)
    return _exit_code(parsed.provenance)


_COMMANDS = {"run": _cmd_run, "figure": _cmd_figure,
             "wigner": _cmd_wigner, "check": _cmd_check}


def main(argv=None):
    args = _parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except MagnomechError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RUNTIME


if __name__ == "__main__":
    sys.exit(main())

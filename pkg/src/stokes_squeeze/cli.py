"""Command line interface.

    stokes-squeeze preset fig3 --out fig3.csv
    stokes-squeeze run --config sweep.ini
    stokes-squeeze point --gamma1 1e-6 --gamma2 4e-6 --gamma-xpm 5e-7 \
        --n1 1e6 --n2 3e6 --omega 0 --omega0 0

Exit codes: 0 success, 2 invalid usage or configuration, 3 I/O failure.
"""
from __future__ import annotations

import argparse
import sys

from . import __version__
from .optimize import optimal_phase, phase_objective
from .params import MediumParams, PulseParams
from .presets import (
    PRESET_NAMES,
    ConfigError,
    SweepResult,
    preset_run_config,
    run_config,
    run_sweep,
    write_result,
)

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_IO = 3

_GUARD_THRESHOLD = 0.1


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad usage already; keep that, but route the
    # message through stderr consistently
    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_CONFIG)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="stokes-squeeze",
        description=(
            "Quantum Stokes fluctuation spectra of two orthogonally "
            "polarized pulses in a fast Kerr medium"
        ),
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_preset = sub.add_parser("preset", help="run a bundled figure preset")
    p_preset.add_argument("name", choices=PRESET_NAMES)
    p_preset.add_argument("--step", type=float, default=0.05,
                          help="sweep grid spacing (default 0.05)")
    p_preset.add_argument("--out", default=None,
                          help="output CSV path (default <name>.csv)")

    p_run = sub.add_parser("run", help="run a sweep described by an INI file")
    p_run.add_argument("--config", required=True, help="INI configuration path")
    p_run.add_argument("--out", default=None,
                       help="override the configured output path")

    p_point = sub.add_parser(
        "point",
        help="optimal phase and spectrum for a single parameter set",
    )
    for flag, req in (
        ("--gamma1", True),
        ("--gamma2", True),
        ("--gamma-xpm", True),
        ("--n1", True),
        ("--n2", True),
        ("--omega", True),
        ("--omega0", True),
    ):
        p_point.add_argument(flag, type=float, required=req)
    p_point.add_argument("--tau-r", type=float, default=1.0)
    p_point.add_argument("--t", type=float, default=0.0)
    return parser


def _print_warnings(result: SweepResult) -> None:
    for warning in result.warnings:
        print(f"warning: {warning}", file=sys.stderr)


def _cmd_preset(args: argparse.Namespace) -> int:
    config = preset_run_config(args.name, step=args.step, output_path=args.out)
    result = run_sweep(config)
    result = write_result(result, config.output_path)
    _print_warnings(result)
    print(f"wrote {result.path}")
    return EXIT_OK


def _cmd_run(args: argparse.Namespace) -> int:
    result = run_config(args.config, output_override=args.out)
    _print_warnings(result)
    print(f"wrote {result.path}")
    return EXIT_OK


def _cmd_point(args: argparse.Namespace) -> int:
    medium = MediumParams(args.gamma1, args.gamma2, args.gamma_xpm, args.tau_r)
    p1 = PulseParams(args.n1)
    p2 = PulseParams(args.n2)
    if not medium.within_approximation(_GUARD_THRESHOLD):
        print(
            "warning: nonlinear coefficient exceeds "
            f"{_GUARD_THRESHOLD}; closed forms assume weak nonlinearity",
            file=sys.stderr,
        )
    opt = optimal_phase(p1, p2, medium, args.omega0, args.t)
    s_at = phase_objective(p1, p2, medium, args.omega, args.t)(opt.delta_phi_opt)
    n1 = p1.n_bar(args.t)
    print(f"delta_phi_opt = {opt.delta_phi_opt:.12g}")
    print(f"s_min_at_omega0 = {opt.s_min:.12g}")
    print(f"s_at_omega = {s_at:.12g}")
    if n1 > 0.0:
        print(f"s_normalized_at_omega = {(s_at - 1.0) / n1:.12g}")
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {"preset": _cmd_preset, "run": _cmd_run, "point": _cmd_point}
    try:
        return handlers[args.command](args)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())

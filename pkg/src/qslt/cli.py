"""Command-line front end.

Subcommands:
    qslt eval        one ratio evaluation, JSON on stdout
    qslt sweep       one-axis parameter sweep, CSV or JSON
    qslt optimal-c   concurrence minimizing the ratio, JSON on stdout
    qslt reproduce   write the fig1..fig6 datasets
    qslt selftest    run the oracle-equivalence suite

Exit codes: 0 success, 1 input error, 2 numerical failure.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path

from . import __version__, kernel
from .channels import ChannelKind
from .entanglement import (
    DEFAULT_GRID_RESOLUTION,
    DEFAULT_REFINEMENT_TOL,
    alpha_from_concurrence,
    gm_concurrence,
    optimal_concurrence,
)
from .figures import FIGURES, FigureRequest, reproduce
from .selftest import run_selftest
from .spacetime import Scenario
from .speed_limit import QuadratureError, qslt_ratio
from .sweep import (
    ConfigError,
    SweepConfig,
    parse_config,
    render_csv,
    render_json,
    run_sweep,
)

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_NUMERICAL = 2


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on usage errors; 2 is reserved for numerical failure
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def _channel_arg(value: str) -> ChannelKind:
    try:
        return ChannelKind(value.upper())
    except ValueError:
        valid = ", ".join(k.value for k in ChannelKind)
        raise argparse.ArgumentTypeError(f"channel must be one of {valid}")


def _add_scenario_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--omega", type=float, default=1.0, help="mode frequency (> 0)")
    group = parser.add_mutually_exclusive_group(required=True)
    group.add_argument("--temperature", type=float, help="Hawking temperature")
    group.add_argument("--mass", type=float, help="black-hole mass (T = 1/(8 pi M))")


def _build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="qslt",
        description="Quantum-speed-limit ratios for a GHZ-family state "
        "near a Schwarzschild horizon under Pauli noise.",
    )
    parser.add_argument("--version", action="version", version=f"qslt {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", help="evaluate one ratio")
    p_eval.add_argument("--channel", type=_channel_arg, required=True)
    p_eval.add_argument("--p-tau", type=float, required=True, dest="p_tau")
    state = p_eval.add_mutually_exclusive_group(required=True)
    state.add_argument("--alpha", type=float, help="GHZ amplitude in [0, 1]")
    state.add_argument("--concurrence", type=float, help="initial GM concurrence")
    p_eval.add_argument("--branch", choices=("lower", "upper"), default="lower")
    _add_scenario_args(p_eval)

    p_sweep = sub.add_parser("sweep", help="sweep one axis")
    p_sweep.add_argument("--config", type=Path, help="JSON config file; overrides flags")
    p_sweep.add_argument("--channel", type=_channel_arg)
    p_sweep.add_argument("--axis", choices=("temperature", "p_tau", "concurrence", "alpha"))
    p_sweep.add_argument("--lo", type=float)
    p_sweep.add_argument("--hi", type=float)
    p_sweep.add_argument("--count", type=int)
    p_sweep.add_argument("--omega", type=float, default=1.0)
    p_sweep.add_argument("--temperature", type=float)
    p_sweep.add_argument("--alpha", type=float)
    p_sweep.add_argument("--p-tau", type=float, dest="p_tau")
    p_sweep.add_argument("--branch", choices=("lower", "upper"), default="lower")
    p_sweep.add_argument("--output", help="output file (default: stdout)")
    p_sweep.add_argument("--format", choices=("csv", "json"), default="csv", dest="fmt")

    p_opt = sub.add_parser("optimal-c", help="concurrence minimizing the ratio")
    p_opt.add_argument("--channel", type=_channel_arg, required=True)
    p_opt.add_argument("--p-tau", type=float, required=True, dest="p_tau")
    p_opt.add_argument("--branch", choices=("lower", "upper"), default="lower")
    p_opt.add_argument("--grid-resolution", type=int, default=DEFAULT_GRID_RESOLUTION)
    p_opt.add_argument("--refinement-tol", type=float, default=DEFAULT_REFINEMENT_TOL)
    _add_scenario_args(p_opt)

    p_repro = sub.add_parser("reproduce", help="write one figure dataset")
    p_repro.add_argument("figure", choices=sorted(FIGURES))
    p_repro.add_argument("--outdir", default="figures")

    sub.add_parser("selftest", help="run the oracle-equivalence suite")
    return parser


def _scenario_from_args(args, alpha: float) -> Scenario:
    if args.temperature is not None:
        return Scenario(alpha=alpha, omega=args.omega, temperature=args.temperature)
    return Scenario(alpha=alpha, omega=args.omega, mass=args.mass)


def _resolve_alpha(args) -> float:
    if args.alpha is not None:
        return args.alpha
    probe = _scenario_from_args(args, 0.5)
    return alpha_from_concurrence(
        args.concurrence, args.omega, probe.temperature, args.branch
    )


def _print_flat_json(data: dict) -> None:
    print(json.dumps(data, sort_keys=True, indent=2))


def _cmd_eval(args) -> int:
    scenario = _scenario_from_args(args, _resolve_alpha(args))
    result = qslt_ratio(args.channel, scenario, args.p_tau)
    _print_flat_json(
        {
            "alpha": scenario.alpha,
            "channel": args.channel.value,
            "concurrence": gm_concurrence(scenario),
            "distance": result.distance,
            "frozen": result.frozen,
            "omega": scenario.omega,
            "p_tau": args.p_tau,
            "path_length": result.path_length,
            "quadrature_error_estimate": result.quadrature_error_estimate,
            "ratio": result.ratio,
            "temperature": scenario.temperature,
        }
    )
    return EXIT_OK


def _cmd_sweep(args) -> int:
    if args.config is not None:
        config = parse_config(args.config.read_text(encoding="utf-8"))
        if isinstance(config, FigureRequest):
            reproduce(config.figure, config.output_dir)
            return EXIT_OK
    else:
        missing = [k for k in ("channel", "axis", "lo", "hi", "count") if getattr(args, k) is None]
        if missing:
            raise ConfigError(missing[0], "required (flag or --config)")
        config = SweepConfig(
            channel=args.channel,
            axis=args.axis,
            lo=args.lo,
            hi=args.hi,
            count=args.count,
            omega=args.omega,
            temperature=args.temperature,
            alpha=args.alpha,
            p_tau=args.p_tau,
            branch=args.branch,
            output=args.output,
            fmt=args.fmt,
        )
    rows = run_sweep(config)
    text = render_csv(config, rows) if config.fmt == "csv" else render_json(config, rows)
    if config.output:
        Path(config.output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    if any(r.error for r in rows):
        print("warning: quadrature failed on some rows (error = 1)", file=sys.stderr)
        return EXIT_NUMERICAL
    return EXIT_OK


def _cmd_optimal_c(args) -> int:
    probe = _scenario_from_args(args, 0.5)
    result = optimal_concurrence(
        args.channel,
        args.omega,
        probe.temperature,
        args.p_tau,
        branch=args.branch,
        grid_resolution=args.grid_resolution,
        refinement_tolerance=args.refinement_tol,
    )
    _print_flat_json(
        {
            "boundary": result.boundary,
            "branch": args.branch,
            "c_op": None if math.isnan(result.c_op) else result.c_op,
            "channel": args.channel.value,
            "grid_resolution": result.grid_resolution,
            "omega": args.omega,
            "p_tau": args.p_tau,
            "ratio_min": result.ratio_min,
            "refinement_tolerance": result.refinement_tolerance,
            "temperature": probe.temperature,
        }
    )
    return EXIT_OK


def _cmd_reproduce(args) -> int:
    for path in reproduce(args.figure, args.outdir):
        print(path)
    return EXIT_OK


def _cmd_selftest(args) -> int:
    results = run_selftest()
    print(f"kernel backend: {kernel.BACKEND}")
    for r in results:
        print(f"{'PASS' if r.ok else 'FAIL'}  {r.name}  ({r.detail})")
    return EXIT_OK if all(r.ok for r in results) else EXIT_NUMERICAL


_COMMANDS = {
    "eval": _cmd_eval,
    "sweep": _cmd_sweep,
    "optimal-c": _cmd_optimal_c,
    "reproduce": _cmd_reproduce,
    "selftest": _cmd_selftest,
}


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # --help, --version, usage errors
        return int(exc.code or 0)
    try:
        return _COMMANDS[args.command](args)
    except QuadratureError as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL
    except (ConfigError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())

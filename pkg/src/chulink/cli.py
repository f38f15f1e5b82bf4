"""Command line front end for the sweep experiments.

Exit codes: 0 on success, 2 for configuration or geometry problems, 3 for
numerical failures (quadrature or bisection not converging).
"""

import argparse
import json
import sys
from dataclasses import asdict

from .errors import NumericalError
from .sweeps import (
    ExperimentConfig,
    default_config,
    emit_csv,
    format_csv,
    run_opa_comparison,
    run_point,
    run_rate_vs_bandwidth,
    run_rate_vs_size,
    run_snr_vs_distance,
)

_REGIME_FLAG = {"nf": "near_field", "ff": "far_field", "auto": "auto"}

_DRIVERS = {
    "snr-distance": run_snr_vs_distance,
    "rate-size": run_rate_vs_size,
    "rate-bandwidth": run_rate_vs_bandwidth,
    "opa-compare": run_opa_comparison,
    "point": run_point,
}


def _add_common(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--config", default=None, help="JSON file overriding experiment defaults")
    sub.add_argument("--out", default=None, help="CSV output path (default: stdout)")
    sub.add_argument("--orientation", choices=["colinear", "parallel", "custom"], default=None)
    sub.add_argument("--beta", type=float, default=None, help="transmit tilt [rad] for custom orientation")
    sub.add_argument("--gamma", type=float, default=None, help="receive tilt [rad] for custom orientation")
    sub.add_argument("--regime", choices=["nf", "ff", "auto"], default=None)
    sub.add_argument("--grid", type=int, default=None, help="frequency grid points per rate integral")
    sub.add_argument("--points", type=int, default=None, help="sweep point count")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chulink",
        description="Achievable-rate calculator for size-constrained short-range links",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    descriptions = {
        "snr-distance": "sweep SNR against electrical separation",
        "rate-size": "sweep uniform-allocation rate against antenna size",
        "rate-bandwidth": "sweep rate against bandwidth ratio at fixed geometry",
        "opa-compare": "compare uniform and water-filled rates over separation",
        "point": "evaluate one configuration (impedances, SNR, rates)",
    }
    for name, text in descriptions.items():
        _add_common(sub.add_parser(name, help=text, description=text))
    return parser


def _experiment_key(args: argparse.Namespace) -> str:
    if args.command != "opa-compare":
        return args.command
    if args.regime == "ff":
        return "opa-compare-ff"
    return "opa-compare-nf"


def _resolve_config(args: argparse.Namespace) -> ExperimentConfig:
    merged = asdict(default_config(_experiment_key(args)))
    if args.config is not None:
        with open(args.config, "r", encoding="utf-8") as handle:
            overrides = json.load(handle)
        if not isinstance(overrides, dict):
            raise ValueError(f"config file {args.config} must hold a JSON object")
        unknown = set(overrides) - set(merged)
        if unknown:
            raise ValueError(f"unknown config keys: {sorted(unknown)}")
        merged.update(overrides)
    if args.orientation is not None:
        merged["orientation"] = args.orientation
    if args.beta is not None:
        merged["beta"] = args.beta
        merged["orientation"] = "custom"
    if args.gamma is not None:
        merged["gamma"] = args.gamma
        merged["orientation"] = "custom"
    if args.regime is not None:
        merged["regime"] = _REGIME_FLAG[args.regime]
    if args.grid is not None:
        merged["freq_grid_points"] = args.grid
    if args.points is not None:
        merged["sweep_points"] = args.points
    return ExperimentConfig.from_dict(merged)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = _resolve_config(args)
        table = _DRIVERS[args.command](cfg)
        if args.out is None:
            sys.stdout.write(format_csv(table))
        else:
            emit_csv(table, args.out)
    except NumericalError as exc:
        print(f"chulink: numerical failure: {exc}", file=sys.stderr)
        return 3
    except (ValueError, OSError) as exc:
        print(f"chulink: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())

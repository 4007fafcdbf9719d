# -*- coding: utf-8 -*-
"""
Точка входа CLI: разбор аргументов (argparse), проверка RunConfig, запуск подкоманды.
Коды выхода: 0 (успех), 2 (ошибка входных данных), 1 (численный отказ).
"""

import argparse
import sys

from src.cli.commands import COMMANDS
from src.cli.run_config import RunConfig
from src.common.errors import InputValidationError, NumericalError
from src.curves.curve_io import dump_json

VERSION = "0.1.0"


def get_cli_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("inputs", nargs="*", help="input files (curve JSON/CSV, sphere curve JSON, surface JSON, HURDAT2)")
    common.add_argument("--n", type=int, default=None, help="resample inputs to N samples")
    common.add_argument("--steps", type=int, default=10, help="geodesic steps (>= 2)")
    common.add_argument("--no-rotations", dest="rotations", action="store_false", help="do not quotient rotations")
    common.add_argument("--no-reparam", dest="reparam", action="store_false",
                        help="do not quotient reparametrizations")
    common.add_argument("--shift-samples", type=int, default=32, help="seed-point candidates for closed curves")
    common.add_argument("--mu", type=float, default=1.0, help="tube radius channel weight")
    common.add_argument("--nu", type=float, default=1.0, help="ruling channel weight")
    common.add_argument("--lambda", dest="lam", type=float, default=1.0, help="aux channel weight on S2 x R")
    common.add_argument("--lambda-w", dest="lam_w", type=float, default=0.01, help="radians per knot of maxwind")
    common.add_argument("--out", default="elastica_out", help="output directory")
    common.add_argument("--seed", type=int, default=0, help="seed for generated inputs")
    common.add_argument("--closed", action="store_true", help="treat CSV curves as closed")
    common.add_argument("--samples", type=int, default=16, help="mesh samples across the surface")

    parser = argparse.ArgumentParser(prog="elastica", description="Elastic shape analysis of curves and surfaces")
    parser.add_argument("--version", action="version", version=VERSION)
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("distance", parents=[common], help="shape distance of two inputs")
    sub.add_parser("geodesic", parents=[common], help="shortest path between two inputs")
    prop = sub.add_parser("prop-check", parents=[common], help="SRV image speed and curvature of a plane curve")
    prop.add_argument("--straightening", nargs=3, type=float, metavar=("A", "B", "AMPLITUDE"),
                      help="use the straightening curve with these constants")
    hur = sub.add_parser("hurricane", parents=[common], help="distance matrix of HURDAT2 tracks")
    hur.add_argument("--year-from", type=int, default=None)
    hur.add_argument("--year-to", type=int, default=None)
    hur.add_argument("--min-category", type=int, default=0, choices=range(0, 6))
    hur.add_argument("--interpolate-missing", action="store_true", help="interpolate missing winds in time")
    sub.add_parser("mesh", parents=[common], help="mesh one surface spec to OBJ")
    return parser


def config_from_args(ns: argparse.Namespace) -> RunConfig:
    straightening = getattr(ns, "straightening", None)
    return RunConfig(
        command=ns.command,
        inputs=tuple(ns.inputs),
        n=ns.n,
        steps=ns.steps,
        rotations=ns.rotations,
        reparam=ns.reparam,
        shift_samples=ns.shift_samples,
        mu=ns.mu,
        nu=ns.nu,
        lam=ns.lam,
        lam_w=ns.lam_w,
        out=ns.out,
        seed=ns.seed,
        closed=ns.closed,
        samples=ns.samples,
        straightening=None if straightening is None else tuple(straightening),
        year_from=getattr(ns, "year_from", None),
        year_to=getattr(ns, "year_to", None),
        min_category=getattr(ns, "min_category", 0),
        interpolate_missing=getattr(ns, "interpolate_missing", False),
    ).validate()


def main(argv: list[str] | None = None) -> int:
    ns = get_cli_parser().parse_args(argv)
    try:
        cfg = config_from_args(ns)
        report = COMMANDS[cfg.command](cfg)
    except InputValidationError as exc:
        print(f"ERROR: {exc}", file=sys.stderr)
        return 2
    except NumericalError as exc:
        print(f"ERROR: {exc}", file=sys.stderr)
        return 1
    sys.stdout.write(dump_json(report))
    return 0

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import List, Optional

from ..error import InvalidParameter, NumericalFailure, UnboundedDynamics
from ..utils.serialization import to_jsonable
from ..version import version
from .commands import (
    EXIT_INVALID,
    EXIT_NUMERICAL,
    EXIT_UNBOUNDED,
    cmd_circuits,
    cmd_compare_floquet,
    cmd_control,
    cmd_effective,
    cmd_simulate,
)
from .scenario import load_scenario

__all__ = ["build_parser", "main"]

logger = logging.getLogger("temporal_homogenization")

COMMANDS = ("effective", "simulate", "control", "circuits", "compare-floquet")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="temporal-homogenization",
        description="Effective dynamics of periodically perturbed linear systems.",
    )
    parser.add_argument("--version", action="version", version=version)
    parser.add_argument(
        "--scenario", required=True, help="Path to the scenario JSON file"
    )
    parser.add_argument(
        "--out", default=".", help="Directory for CSV and JSON outputs (default: .)"
    )
    parser.add_argument(
        "--jobs", type=int, default=1, help="Worker processes for parameter sweeps"
    )
    parser.add_argument("--seed", type=int, help="Seed overriding the scenario seed")
    parser.add_argument(
        "--log-level",
        default="WARNING",
        choices=["DEBUG", "INFO", "WARNING", "ERROR"],
        help="Logging level on stderr (default: WARNING)",
    )
    commands = parser.add_subparsers(dest="command", required=True)
    commands.add_parser("effective", help="Compute the effective matrix B")
    commands.add_parser(
        "simulate", help="Compare the homogenized and reference solutions"
    )
    commands.add_parser("control", help="Run the amplitude control")
    circuits = commands.add_parser("circuits", help="Analyze coupled RLC banks")
    circuits.add_argument("action", choices=["analyze", "verify"])
    commands.add_parser(
        "compare-floquet", help="Compare with the perturbative Floquet baseline"
    )
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """Run one subcommand and return its exit code.

    0 is success, 2 an input error, 3 an unbounded verdict and 4 a
    numerical failure. The report is printed as JSON on stdout.
    """
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=args.log_level,
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )
    out = Path(args.out)
    try:
        if args.jobs < 1:
            raise InvalidParameter(f"--jobs must be positive, got {args.jobs}.")
        scenario = load_scenario(args.scenario)
        if args.seed is not None:
            scenario = scenario._replace(run=scenario.run._replace(seed=args.seed))
        out.mkdir(parents=True, exist_ok=True)
        if args.command == "effective":
            report, code = cmd_effective(scenario, out)
        elif args.command == "simulate":
            report, code = cmd_simulate(scenario, out)
        elif args.command == "control":
            report, code = cmd_control(scenario, out)
        elif args.command == "circuits":
            report, code = cmd_circuits(scenario, out, args.action, args.jobs)
        else:
            report, code = cmd_compare_floquet(scenario, out)
    except (InvalidParameter, ValueError, OSError) as error:
        logger.error("Invalid input: %s", error)
        return EXIT_INVALID
    except UnboundedDynamics as error:
        logger.error("Unbounded dynamics: %s", error)
        return EXIT_UNBOUNDED
    except (NumericalFailure, ArithmeticError) as error:
        logger.error("Numerical failure: %s", error)
        return EXIT_NUMERICAL
    print(json.dumps(to_jsonable(report), indent=2, sort_keys=True))
    return code

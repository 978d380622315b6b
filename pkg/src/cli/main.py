"""
Command line for SetColour Lab.

    setcolour [global flags] <command> ...

Every command prints one :class:`~cli.report.RunReport` on stdout. Exit
codes: 0 success, 1 a verified negative answer, 2 usage or parse errors,
3 a search that ran out of budget.
"""

import argparse
import time
from functools import partial
from typing import List, Optional

from config import (
    DEFAULT_LOG_LEVEL,
    DEFAULT_SEED,
    DEFAULT_THREADS,
    EXIT_BUDGET,
    EXIT_NEGATIVE,
    EXIT_USAGE,
    TOOL_NAME,
    TOOL_VERSION,
)
from cli import commands
from cli.constructions import CONSTRUCTIONS
from cli.report import RunReport, emit
from colouring.errors import BudgetExceeded, ColouringParseError, CoverConstructionError, ParameterError
from logger import get_logger, setup_logging

logger = get_logger(__name__)

HANDLERS = {
    "construct": commands.cmd_construct,
    "cover": commands.cmd_cover,
    "partition": commands.cmd_partition,
    "critical": commands.cmd_critical,
    "ramsey": commands.cmd_ramsey,
    "ryser": commands.cmd_ryser,
    "verify": commands.cmd_verify,
    "accept": commands.cmd_accept,
}

COVER_METHODS = ["exact", "construct"]
PARTITION_KINDS = ["paths", "cycles"]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="setcolour", description="Set-colouring tree covers and set-Ramsey numbers", allow_abbrev=False
    )
    parser.add_argument("--version", action="version", version=f"{TOOL_NAME} {TOOL_VERSION}")
    parser.add_argument("--seed", type=int, default=DEFAULT_SEED, help="Seed for every random choice")
    parser.add_argument("--threads", type=int, default=DEFAULT_THREADS, help="Worker processes for Ramsey searches")
    parser.add_argument("--budget", type=int, default=None, help="Node budget for exact searches")
    parser.add_argument("--time-limit", type=float, default=None, help="Wall-clock limit in seconds for Ramsey searches")
    parser.add_argument("--log-level", default=DEFAULT_LOG_LEVEL, help="DEBUG, INFO, WARNING or ERROR")
    parser.add_argument("--format", choices=["json", "text"], default="json", help="Report format on stdout")
    sub = parser.add_subparsers(dest="command", required=True)
    add = partial(sub.add_parser, allow_abbrev=False)

    construct = add("construct", help="Build a named colouring")
    construct.add_argument("name", choices=sorted(CONSTRUCTIONS) + ["random"])
    for flag in ("q", "r", "k", "m", "n", "length"):
        construct.add_argument(f"--{flag}", type=int, default=None)
    construct.add_argument("--json", action="store_true", help="Write --out as JSON instead of text")
    construct.add_argument("--check", action="store_true", help="Verify the construction's claim")
    construct.add_argument("--out", default=None, help="Also write the colouring to this file")

    cover = add("cover", help="Tree cover of a colouring")
    cover.add_argument("method", nargs="?", choices=COVER_METHODS, default=None)
    cover.add_argument("file", help="Colouring file, or - for stdin")
    cover.add_argument("--method", dest="method_option", choices=COVER_METHODS, default=None)
    cover.add_argument("--colours", default=None, help="Comma-separated colours the trees may use")

    partition = add("partition", help="Monochromatic path or cycle partition")
    partition.add_argument("kind", nargs="?", choices=PARTITION_KINDS, default=None)
    partition.add_argument("file")
    partition.add_argument("--kind", dest="kind_option", choices=PARTITION_KINDS, default=None)

    critical = add("critical", help="Criticality report for t = 2 or 3")
    critical.add_argument("file")
    critical.add_argument("--t", type=int, default=3)

    ramsey = add("ramsey", help="Set-Ramsey searches and bounds")
    ramsey.add_argument("action", choices=["search", "number", "bounds", "trivial", "cycle-lb"])
    ramsey.add_argument("--r", type=int, required=True)
    ramsey.add_argument("--k", type=int, required=True)
    ramsey.add_argument("--target", default="K3", help="K<t> or C<odd length>")
    ramsey.add_argument("--n", type=int, default=None, help="Host size for search")
    ramsey.add_argument("--n-max", type=int, default=None, help="Largest host size number may search (default: classical bound, capped)")
    ramsey.add_argument("--t", type=int, default=3, help="Clique size for trivial")
    ramsey.add_argument("--length", type=int, default=3, help="Odd cycle length for cycle-lb")
    ramsey.add_argument("--use-classical", action="store_true")
    ramsey.add_argument("--use-known", action="store_true")
    ramsey.add_argument("--no-symmetry", action="store_true", help="Disable symmetry breaking")

    ryser = add("ryser", help="Hypergraph transversals through colourings")
    ryser.add_argument("action", choices=["convert", "transversal", "check"])
    ryser.add_argument("file")
    ryser.add_argument("--reverse", action="store_true", help="convert a colouring into a hypergraph")
    ryser.add_argument("--saturate", action="store_true", help="saturate before a reverse conversion")
    ryser.add_argument("--k", type=int, default=None, help="Intersection level to use")

    verify = add("verify", help="Check a certificate against a colouring")
    verify.add_argument("colouring")
    verify.add_argument("certificate")

    accept = add("accept", help="Run the acceptance suite")
    accept.add_argument("--suite", default="all")
    accept.add_argument("--criteria", default=None, help="Comma-separated criterion numbers")
    accept.add_argument("--quick", action="store_true", help="Fewer samples and smaller budgets")
    return parser


def _settle_modes(args: argparse.Namespace) -> None:
    """Merge the positional and flag spellings of cover methods and partition kinds."""
    for name, default in (("method", "exact"), ("kind", "paths")):
        if not hasattr(args, name):
            continue
        positional, option = getattr(args, name), getattr(args, f"{name}_option")
        if positional and option and positional != option:
            raise ParameterError(f"{name} given twice: {positional} and --{name} {option}")
        setattr(args, name, positional or option or default)
        delattr(args, f"{name}_option")


def _parameters(args: argparse.Namespace) -> dict:
    skip = {"command", "format", "log_level"}
    return {key: value for key, value in vars(args).items() if key not in skip}


def dispatch(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    setup_logging(args.log_level)
    if args.command == "ramsey" and args.action == "search" and args.n is None:
        parser.error("ramsey search needs --n")

    started = time.perf_counter()
    try:
        _settle_modes(args)
        outcome, payload, code = HANDLERS[args.command](args)
    except (ParameterError, ColouringParseError, OSError) as exc:
        logger.critical("%s", exc)
        outcome, payload, code = "usage-error", {"error": str(exc)}, EXIT_USAGE
    except BudgetExceeded as exc:
        logger.warning("%s", exc)
        outcome = "BudgetExceeded"
        payload = {"error": str(exc), "what": exc.what, "nodes": exc.nodes, "budget": exc.budget}
        code = EXIT_BUDGET
    except (CoverConstructionError, AssertionError) as exc:
        logger.error("%s", exc)
        outcome, payload, code = "negative", {"error": str(exc)}, EXIT_NEGATIVE

    report = RunReport(
        command=args.command,
        parameters=_parameters(args),
        outcome=outcome,
        payload=payload,
        seed=args.seed,
        wall_time=round(time.perf_counter() - started, 6),
        exit_code=code,
    )
    emit(report, args.format)
    return code


def main() -> None:
    raise SystemExit(dispatch())


if __name__ == "__main__":
    main()

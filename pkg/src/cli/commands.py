"""
Sub-command bodies.

Every command takes the parsed arguments and returns ``(outcome, payload,
exit_code)``; :func:`cli.main.dispatch` wraps that into a
:class:`~cli.report.RunReport` and turns library exceptions into exit codes.
"""

import json
import sys
from pathlib import Path
from typing import Any, Dict, Tuple

from config import (
    DEFAULT_COVER_BUDGET,
    EXIT_BUDGET,
    EXIT_NEGATIVE,
    EXIT_OK,
)
from cli.acceptance import run_suite
from cli.constructions import CONSTRUCTIONS
from colouring.colour_set import colour_set
from colouring.errors import ColouringParseError, ParameterError
from colouring.io import (
    cover_from_document,
    cover_to_document,
    parse_colouring,
    parse_json,
    serialize,
    to_document,
)
from colouring.model import HostGraph, SetColouring
from colouring.sampling import random_colouring
from colouring.validation import validate
from logger import get_logger
from ramsey.bounds import cycle_lower_bound, general_bounds, trivial_ramsey_predicate, turan_upper_bound
from ramsey.number import ramsey_number
from ramsey.search import Outcome, ramsey_search
from ramsey.target import TargetGraph, TargetKind
from ryser.bridge import colouring_to_hypergraph, hypergraph_to_colouring, ryser_transversal, saturate
from ryser.hypergraph import (
    intersection_level,
    is_intersecting,
    matching_number,
    parse_hypergraph,
    to_document as hypergraph_document,
    transversal_exact,
)
from solver.constructive import bipartite_regime, complete_regime, constructive_bound, constructive_cover
from solver.critical import critical_report, critical_vertices_summary
from solver.exact import exact_tree_cover, verify_cover
from solver.partition import (
    exact_cycle_partition,
    exact_path_partition,
    partition_from_document,
    partition_to_document,
    verify_partition,
)

logger = get_logger(__name__)

Result = Tuple[str, Dict[str, Any], int]

# Exact transversal and cover cross-checks in ``ryser`` stay at desk scale.
RYSER_EXACT_EDGES = 20


def read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text(encoding="utf-8")


def _load_json(text: str, what: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ColouringParseError(f"invalid JSON: {exc.msg}", exc.lineno, what) from exc


def load_colouring(path: str) -> SetColouring:
    """A colouring in text or JSON form, or the colouring inside a ``construct`` run report."""
    text = read_input(path)
    if text.lstrip().startswith("{"):
        data = _load_json(text, "colouring")
        if isinstance(data, dict) and isinstance(data.get("payload"), dict) and "colouring" in data["payload"]:
            return parse_json(json.dumps(data["payload"]["colouring"]))
    return parse_colouring(text)


def _verdict(problems) -> Tuple[str, int]:
    return ("ok", EXIT_OK) if not problems else ("negative", EXIT_NEGATIVE)


def _budget(args) -> int:
    return DEFAULT_COVER_BUDGET if args.budget is None else args.budget


def cmd_construct(args) -> Result:
    if args.name == "random":
        if None in (args.n, args.r, args.k):
            raise ParameterError("random needs --n, --r and --k (and --m for a bipartite host)")
        host = HostGraph.bipartite(args.n, args.m) if args.m else HostGraph.complete(args.n)
        colouring = random_colouring(host, args.r, args.k, args.seed)
        problems = validate(colouring) if args.check else []
    else:
        construction = CONSTRUCTIONS[args.name]
        params = {p: getattr(args, p) for p in construction.params}
        missing = [p for p, value in params.items() if value is None]
        if missing:
            raise ParameterError(f"{args.name} needs " + ", ".join(f"--{p}" for p in missing))
        colouring = construction.build(**params)
        problems = construction.check(colouring, params, _budget(args)) if args.check else []

    if args.out:
        Path(args.out).write_text(serialize(colouring, args.json), encoding="utf-8")
        logger.info("wrote %s to %s", colouring.describe(), args.out)
    outcome, code = _verdict(problems)
    payload = {
        "construction": args.name,
        "description": colouring.describe(),
        "colouring": to_document(colouring).model_dump(),
    }
    if args.check:
        payload["check"] = {"passed": not problems, "problems": problems}
    return outcome, payload, code


def cmd_cover(args) -> Result:
    colouring = load_colouring(args.file)
    payload: Dict[str, Any] = {"description": colouring.describe()}
    if args.method == "exact":
        allowed = colour_set(int(c) for c in args.colours.split(",")) if args.colours else None
        value, certificate = exact_tree_cover(colouring, args.budget, allowed)
    else:
        certificate = constructive_cover(colouring)
        value = certificate.size
        payload["bound"] = constructive_bound(colouring)
        payload["regime"] = (
            bipartite_regime(colouring.r, colouring.k) if colouring.host.is_bipartite
            else complete_regime(colouring.r, colouring.k, colouring.n)
        )
    problems = verify_cover(colouring, certificate)
    payload.update(
        value=value,
        certificate=cover_to_document(certificate).model_dump(),
        verified=not problems,
        problems=problems,
    )
    outcome, code = _verdict(problems)
    return outcome, payload, code


def cmd_partition(args) -> Result:
    colouring = load_colouring(args.file)
    solve = exact_path_partition if args.kind == "paths" else exact_cycle_partition
    value, certificate = solve(colouring, args.budget)
    problems = verify_partition(colouring, certificate)
    outcome, code = _verdict(problems)
    return outcome, {
        "description": colouring.describe(),
        "value": value,
        "certificate": partition_to_document(certificate).model_dump(mode="json"),
        "verified": not problems,
        "problems": problems,
    }, code


def cmd_critical(args) -> Result:
    colouring = load_colouring(args.file)
    report = critical_report(colouring, args.t, args.budget)
    payload = report.as_dict()
    payload["summary"] = critical_vertices_summary(report)
    return "ok", payload, EXIT_OK


def _target(args) -> TargetGraph:
    return TargetGraph.parse(args.target)


def cmd_ramsey(args) -> Result:
    if args.action == "search":
        report = ramsey_search(
            args.r, args.k, _target(args), args.n, args.budget,
            symmetry=not args.no_symmetry, threads=args.threads, time_limit=args.time_limit,
        )
        code = EXIT_BUDGET if report.outcome is Outcome.BUDGET_EXCEEDED else EXIT_OK
        return report.outcome.value, report.to_document().model_dump(mode="json"), code

    if args.action == "number":
        value = ramsey_number(
            args.r, args.k, _target(args), args.n_max, args.budget,
            use_classical=args.use_classical, use_known=args.use_known,
            symmetry=not args.no_symmetry, threads=args.threads, time_limit=args.time_limit,
        )
        exceeded = any(s.outcome is Outcome.BUDGET_EXCEEDED for s in value.searches)
        if value.exact is not None:
            return "exact", value.as_dict(), EXIT_OK
        return ("BudgetExceeded" if exceeded else "interval"), value.as_dict(), EXIT_BUDGET if exceeded else EXIT_OK

    if args.action == "bounds":
        target = _target(args)
        lo, hi = general_bounds(args.r, args.k, target)
        payload: Dict[str, Any] = {"target": str(target), "general": [lo, hi]}
        if target.kind is TargetKind.CLIQUE:
            payload["turan"] = turan_upper_bound(args.r, args.k, target.size)
            payload["trivial"] = trivial_ramsey_predicate(args.r, args.k, target.size)
        return "ok", payload, EXIT_OK

    if args.action == "trivial":
        holds = trivial_ramsey_predicate(args.r, args.k, args.t)
        return "ok", {"r": args.r, "k": args.k, "t": args.t, "ram_equals_t": holds}, EXIT_OK

    bound, witness = cycle_lower_bound(args.r, args.k, args.length)
    return "ok", {"bound": bound, "witness": to_document(witness).model_dump()}, EXIT_OK


def cmd_ryser(args) -> Result:
    if args.action == "convert" and args.reverse:
        colouring = load_colouring(args.file)
        if args.saturate:
            colouring = saturate(colouring)
        h = colouring_to_hypergraph(colouring)
        return "ok", {"hypergraph": hypergraph_document(h).model_dump()}, EXIT_OK

    h = parse_hypergraph(read_input(args.file))
    if args.action == "convert":
        colouring = hypergraph_to_colouring(h)
        return "ok", {
            "intersecting": is_intersecting(h),
            "colouring": to_document(colouring).model_dump(),
        }, EXIT_OK

    if args.action == "transversal":
        k = args.k if args.k is not None else intersection_level(h)
        result = ryser_transversal(h, k)
        payload = result.as_dict()
        if h.num_edges <= RYSER_EXACT_EDGES:
            payload["tau"], _ = transversal_exact(h, args.budget)
        code = EXIT_OK if result.size <= result.bound else EXIT_NEGATIVE
        return ("ok" if code == EXIT_OK else "negative"), payload, code

    tau, vertices = transversal_exact(h, args.budget)
    payload = {
        "edges": h.num_edges,
        "tau": tau,
        "transversal": [list(v) for v in vertices],
        "nu": matching_number(h, args.budget),
        "intersecting": is_intersecting(h),
        "level": intersection_level(h) if h.edges else None,
    }
    code = EXIT_OK
    if h.edges and h.num_edges <= RYSER_EXACT_EDGES:
        cover_value, _ = exact_tree_cover(hypergraph_to_colouring(h), args.budget)
        payload["tree_cover"] = cover_value
        if cover_value != tau:
            code = EXIT_NEGATIVE
    return ("ok" if code == EXIT_OK else "negative"), payload, code


def cmd_verify(args) -> Result:
    colouring = load_colouring(args.colouring)
    data = _load_json(read_input(args.certificate), "certificate")
    if isinstance(data, dict) and isinstance(data.get("payload"), dict) and "certificate" in data["payload"]:
        data = data["payload"]["certificate"]
    if not isinstance(data, dict):
        raise ColouringParseError("certificate must be a JSON object", None, "certificate")
    if data.get("kind") == "partition":
        problems = verify_partition(colouring, partition_from_document(data))
    else:
        problems = verify_cover(colouring, cover_from_document(data, colouring.host.num_vertices))
    for problem in problems:
        logger.warning("%s", problem)
    outcome = "verified" if not problems else "negative"
    return outcome, {"kind": data.get("kind", "tree-cover"), "problems": problems}, EXIT_OK if not problems else EXIT_NEGATIVE


def cmd_accept(args) -> Result:
    criteria = [int(c) for c in args.criteria.split(",")] if args.criteria else None
    results = run_suite(criteria, quick=args.quick, seed=args.seed, threads=args.threads)
    failed = [r.number for r in results if r.status == "fail"]
    return ("pass" if not failed else "fail"), {
        "suite": args.suite,
        "criteria": [r.as_dict() for r in results],
        "failed": failed,
    }, EXIT_OK if not failed else EXIT_NEGATIVE

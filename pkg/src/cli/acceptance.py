"""
Acceptance suite: twelve end-to-end checks of the library's headline claims.

Each criterion returns ``(status, detail)`` with status ``pass``, ``fail`` or
``degraded`` (a stretch goal ran out of budget and said so). ``quick`` trims
sample counts and search budgets for smoke runs.
"""

import time
from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Dict, Iterator, List, Optional, Tuple

import networkx as nx
import numpy as np
from rich.table import Table
from tqdm import tqdm

from config import DEFAULT_RAMSEY_BUDGET, DEFAULT_SEED, STRETCH_RAMSEY_BUDGET
from colouring.colour_set import k_subsets
from colouring.components import sees_all_colours
from colouring.errors import ParameterError
from colouring.model import HostGraph, SetColouring
from colouring.reductions import duplicate_vertex, reduce_to_partition_colouring, split_colours
from colouring.sampling import make_rng, random_colouring_from
from colouring.validation import validate
from generator.affine import turan_affine_colouring
from generator.bipartite import bipartite_subsets_colouring, bipartite_tuples_colouring, tuple_lower_bound
from generator.codes import code_colouring, distance_code, min_distance
from generator.complete import path_partition_lb_colouring, two_missing_colouring
from logger import console, get_logger
from ramsey.bounds import trivial_ramsey_predicate, turan_upper_bound
from ramsey.detect import has_mono_subgraph
from ramsey.search import Outcome, exhaustive_avoiding_colouring, ramsey_search, relabelling_beats
from ramsey.target import TargetGraph
from ryser.bridge import hypergraph_to_colouring, ryser_transversal
from ryser.hypergraph import random_intersecting_hypergraph, transversal_exact
from solver.constructive import bipartite_bound, bipartite_regime, constructive_cover_bipartite
from solver.critical import lbn_inequality
from solver.exact import exact_tree_cover, verify_cover
from solver.partition import exact_cycle_partition, exact_path_partition

logger = get_logger(__name__)

Verdict = Tuple[str, str]
TRIANGLE = TargetGraph.clique(3)

# Codes up to this many words also get their colourings checked with networkx.
NETWORKX_CODE_LIMIT = 512


@dataclass
class CriterionResult:
    number: int
    title: str
    status: str
    detail: str
    elapsed: float

    def as_dict(self) -> dict:
        return {
            "number": self.number,
            "title": self.title,
            "status": self.status,
            "detail": self.detail,
            "elapsed": round(self.elapsed, 3),
        }


@dataclass
class _Context:
    quick: bool
    seed: int
    threads: int

    def samples(self, full: int, quick: int) -> int:
        return quick if self.quick else full

    def progress(self, iterable, total: int, desc: str):
        return tqdm(iterable, total=total, desc=desc, leave=False, disable=self.quick)


def _verdict(failures: List[str], detail: str) -> Verdict:
    if failures:
        return "fail", "; ".join(failures[:5])
    return "pass", detail


def _canonical_colourings(r: int, k: int, n: int) -> Iterator[SetColouring]:
    """One (r,k)-colouring of K_n per orbit under colour relabelling."""
    host = HostGraph.complete(n)
    options = k_subsets(r, k)
    prefix: List[int] = []

    def walk() -> Iterator[SetColouring]:
        if len(prefix) == host.num_edges:
            yield SetColouring(host, r, tuple(prefix), k)
            return
        for bits in options:
            prefix.append(bits)
            if not relabelling_beats(prefix, r):
                yield from walk()
            prefix.pop()

    yield from walk()


def criterion_two_missing(ctx: _Context) -> Verdict:
    failures = []
    seen = 0
    for colouring in ctx.progress(_canonical_colourings(5, 2, 4), None, "(5,2) on K4"):
        seen += 1
        value, _ = exact_tree_cover(colouring)
        if value > 2:
            failures.append(f"{colouring.colours} needs {value} trees")
    value, _ = exact_tree_cover(two_missing_colouring(5))
    if value != 2:
        failures.append(f"two-missing colouring of K_5 has tree cover number {value}")
    return _verdict(failures, f"{seen} relabelling classes of all 10^6 colourings, max 2; witness attains 2")


def criterion_bipartite_conformance(ctx: _Context) -> Verdict:
    rng = make_rng(ctx.seed)
    per_pair = ctx.samples(500, 20)
    host = HostGraph.bipartite(20, 20)
    failures, regimes = [], set()
    pairs = [(r, k) for r in range(2, 9) for k in range(1, r)]
    for r, k in ctx.progress(pairs, len(pairs), "K_{20,20}"):
        regimes.add(bipartite_regime(r, k))
        bound = bipartite_bound(r, k)
        for _ in range(per_pair):
            colouring = random_colouring_from(host, r, k, rng)
            certificate = constructive_cover_bipartite(colouring)
            problems = verify_cover(colouring, certificate)
            if problems or certificate.size > bound:
                failures.append(f"(r,k)=({r},{k}): size {certificate.size}/{bound} {problems[:1]}")
                break
    missing = {"half or more", "two-k-plus-p", "paired stars"} - regimes
    if missing:
        failures.append(f"regimes never exercised: {sorted(missing)}")
    return _verdict(failures, f"{len(pairs)} (r,k) pairs x {per_pair} colourings, regimes {sorted(regimes)}")


def _brute_force_cover(colouring: SetColouring) -> int:
    """Smallest number of maximal monochromatic components covering all vertices, via networkx."""
    pieces = set()
    for c in range(colouring.r):
        graph = nx.Graph()
        graph.add_nodes_from(range(colouring.n))
        graph.add_edges_from((u, v) for u, v, bits in colouring.iter_edges() if bits >> c & 1)
        pieces.update(frozenset(comp) for comp in nx.connected_components(graph))
    maximal = [p for p in pieces if not any(p < q for q in pieces)]
    everything = frozenset(range(colouring.n))
    for size in range(1, len(maximal) + 1):
        for chosen in combinations(maximal, size):
            if frozenset().union(*chosen) == everything:
                return size
    return len(maximal)


def criterion_bipartite_witnesses(ctx: _Context) -> Verdict:
    failures, values = [], {}
    pairs = [(3, 1), (4, 1), (4, 2), (5, 2), (6, 2)]
    for r, k in ctx.progress(pairs, len(pairs), "witnesses"):
        for name, colouring, bound in (
            ("subsets", bipartite_subsets_colouring(r, k, 2), r - k + 1),
            ("tuples", bipartite_tuples_colouring(r, k), tuple_lower_bound(r, k)),
        ):
            value, _ = exact_tree_cover(colouring)
            check = _brute_force_cover(colouring)
            values[f"{name}({r},{k})"] = value
            if value < bound:
                failures.append(f"{name}({r},{k}): {value} < {bound}")
            if value != check:
                failures.append(f"{name}({r},{k}): solver {value} != enumeration {check}")
    for key, expected in (("tuples(4,2)", 3), ("tuples(4,1)", 6)):
        if values.get(key) != expected:
            failures.append(f"{key} = {values.get(key)}, expected {expected}")
    return _verdict(failures, ", ".join(f"{k}={v}" for k, v in values.items()))


def criterion_ram_3_2(ctx: _Context) -> Verdict:
    failures = []
    for symmetry in (True, False):
        small = ramsey_search(3, 2, TRIANGLE, 4, symmetry=symmetry)
        large = ramsey_search(3, 2, TRIANGLE, 5, symmetry=symmetry)
        if small.outcome is not Outcome.AVOIDABLE:
            failures.append(f"n=4 symmetry={symmetry}: {small.outcome.value}")
        if large.outcome is not Outcome.UNAVOIDABLE:
            failures.append(f"n=5 symmetry={symmetry}: {large.outcome.value}")
    if exhaustive_avoiding_colouring(3, 2, TRIANGLE, 4) is None:
        failures.append("unpruned enumeration finds no avoiding colouring of K_4")
    if exhaustive_avoiding_colouring(3, 2, TRIANGLE, 5) is not None:
        failures.append("unpruned enumeration finds an avoiding colouring of K_5")
    return _verdict(failures, "Avoidable at 4, Unavoidable at 5, agreeing with all 3^10 colourings")


def criterion_ram_4_2(ctx: _Context) -> Verdict:
    witness = code_colouring(distance_code(4, 2), 2)
    if witness.n != 8 or has_mono_subgraph(witness, TRIANGLE) is not None:
        return "fail", f"code colouring on K_{witness.n} is not triangle-free"
    budget = DEFAULT_RAMSEY_BUDGET if ctx.quick else STRETCH_RAMSEY_BUDGET
    report = ramsey_search(4, 2, TRIANGLE, 9, budget, threads=ctx.threads)
    if report.outcome is Outcome.UNAVOIDABLE:
        return "pass", f"K_8 witness; Unavoidable at n=9 after {report.nodes} nodes"
    if report.outcome is Outcome.BUDGET_EXCEEDED:
        logger.warning("ram_4,2(K_3) upper half: budget of %d nodes exceeded", budget)
        return "degraded", f"K_8 witness; n=9 search BudgetExceeded after {report.nodes} nodes"
    return "fail", "search found a triangle-free (4,2)-colouring of K_9"


def criterion_trivial_predicate(ctx: _Context) -> Verdict:
    failures, checked = [], 0
    pairs = [(r, k) for r in range(1, 7) for k in range(1, r + 1)]
    for r, k in ctx.progress(pairs, len(pairs), "K_3 at n=3"):
        predicted = trivial_ramsey_predicate(r, k, 3)
        forced = exhaustive_avoiding_colouring(r, k, TRIANGLE, 3) is None
        searched = ramsey_search(r, k, TRIANGLE, 3).outcome is Outcome.UNAVOIDABLE
        checked += 1
        if not predicted == forced == searched:
            failures.append(f"(r,k)=({r},{k}): predicate {predicted}, brute force {forced}, search {searched}")
    return _verdict(failures, f"{checked} (r,k) pairs agree")


def criterion_turan_tightness(ctx: _Context) -> Verdict:
    failures = []
    bound = turan_upper_bound(3, 2, 3)
    if bound != 5:
        failures.append(f"Turan bound {bound} != 5")
    if ramsey_search(3, 2, TRIANGLE, 4).outcome is not Outcome.AVOIDABLE:
        failures.append("K_4 search not Avoidable")
    if ramsey_search(3, 2, TRIANGLE, 5).outcome is not Outcome.UNAVOIDABLE:
        failures.append("K_5 search not Unavoidable")
    witness = turan_affine_colouring(2)
    if validate(witness) or witness.n != 4 or has_mono_subgraph(witness, TRIANGLE) is not None:
        failures.append("affine (3,2)-colouring of K_4 is not a valid triangle-free witness")
    return _verdict(failures, "bound 5 = measured value; affine K_4 witness verified")


def _popcount(values: np.ndarray) -> np.ndarray:
    return np.unpackbits(values.astype(np.uint64).view(np.uint8)).reshape(len(values), 64).sum(axis=1)


def _code_problems(r: int, k: int) -> List[str]:
    code = distance_code(r, k)
    expected = 2 ** ((r - 1) // (k - 1))
    problems = []
    if len(code) != expected:
        problems.append(f"(r,k)=({r},{k}): {len(code)} words, expected {expected}")
    packed = code.astype(np.int64) @ (np.int64(1) << np.arange(r, dtype=np.int64))
    for u in range(len(packed) - 1):
        if _popcount(packed[u] ^ packed[u + 1:]).min() < k:
            problems.append(f"(r,k)=({r},{k}): word {u} has a neighbour at distance < {k}")
            break
    if len(code) <= NETWORKX_CODE_LIMIT:
        if len(code) > 1 and min_distance(code) < k:
            problems.append(f"(r,k)=({r},{k}): min_distance below {k}")
        colouring = code_colouring(code, k)
        for c in range(r):
            graph = nx.Graph()
            graph.add_nodes_from(range(colouring.n))
            graph.add_edges_from((u, v) for u, v, bits in colouring.iter_edges() if bits >> c & 1)
            if not nx.is_bipartite(graph):
                problems.append(f"(r,k)=({r},{k}): colour {c} is not bipartite")
    return problems


def criterion_codes(ctx: _Context) -> Verdict:
    cases = [(r, k) for k in (2, 3) for r in range(k, 14) if (r - 1) % (k - 1) == 0]
    failures = []
    for r, k in ctx.progress(cases, len(cases), "codes"):
        failures.extend(_code_problems(r, k))
    return _verdict(failures, f"{len(cases)} codes; colour classes checked up to {NETWORKX_CODE_LIMIT} words")


def criterion_partitions(ctx: _Context) -> Verdict:
    failures = []
    for r in (2, 3):
        colouring = path_partition_lb_colouring(r)
        paths, _ = exact_path_partition(colouring)
        cycles, _ = exact_cycle_partition(colouring)
        if (paths, cycles) != (2, 2):
            failures.append(f"r={r}: path partition {paths}, cycle partition {cycles}")
    rng = make_rng(ctx.seed)
    samples = ctx.samples(200, 20)
    host = HostGraph.complete(8)
    worst = 0
    for _ in ctx.progress(range(samples), samples, "(3,2) on K8"):
        value, _ = exact_cycle_partition(random_colouring_from(host, 3, 2, rng))
        worst = max(worst, value)
    if worst > 2:
        failures.append(f"a random (3,2)-colouring of K_8 needs {worst} cycles")
    return _verdict(failures, f"lower-bound colourings need 2; {samples} random K_8 colourings need <= {worst}")


def criterion_ryser(ctx: _Context) -> Verdict:
    rng = make_rng(ctx.seed)
    samples = ctx.samples(200, 20)
    failures = []
    done = 0
    for i in ctx.progress(range(samples), samples, "hypergraphs"):
        r = 3 if i % 2 == 0 else 4
        k = 1 if r == 3 else int(rng.integers(1, 3))
        edges = int(rng.integers(4, 10))
        try:
            h = random_intersecting_hypergraph(r, k, edges, 3, seed=int(rng.integers(0, 2**31)))
        except ParameterError as exc:
            failures.append(f"sample {i}: {exc}")
            continue
        done += 1
        tau, _ = transversal_exact(h)
        cover, _ = exact_tree_cover(hypergraph_to_colouring(h))
        if tau != cover:
            failures.append(f"sample {i}: tau {tau} != tree cover {cover}")
        result = ryser_transversal(h, k)
        if result.size > result.bound or not h.is_transversal(result.transversal):
            failures.append(f"sample {i}: transversal of size {result.size} (bound {result.bound})")
    if done < samples:
        failures.append(f"only {done} of {samples} hypergraphs could be generated")
    return _verdict(failures, f"{done} hypergraphs: tau = tree cover, transversals within bound")


def criterion_lbn(ctx: _Context) -> Verdict:
    failures = []
    if lbn_inequality(10, 5, 2, 3) or not lbn_inequality(11, 5, 2, 3):
        failures.append("lbn inequality at (10,5,2,3)/(11,5,2,3) disagrees with false/true")
    rng = make_rng(ctx.seed)
    samples = ctx.samples(300, 40)
    checked = 0
    for _ in ctx.progress(range(samples), samples, "lbn samples"):
        r = int(rng.integers(2, 6))
        k = int(rng.integers(1, r))
        n = int(rng.integers(4, 11))
        colouring = random_colouring_from(HostGraph.complete(n), r, k, rng)
        if not sees_all_colours(colouring):
            continue
        value, _ = exact_tree_cover(colouring)
        if n < 2 * (value - 1):
            continue
        checked += 1
        if not lbn_inequality(n, r, k, value):
            failures.append(f"(n,r,k,t)=({n},{r},{k},{value}) violates the inequality")
    return _verdict(failures, f"{checked} colourings seeing every colour satisfy the inequality")


def _random_k_set(rng: np.random.Generator, r: int, k: int) -> int:
    options = k_subsets(r, k)
    return options[int(rng.integers(0, len(options)))]


def criterion_reductions(ctx: _Context) -> Verdict:
    rng = make_rng(ctx.seed)
    samples = ctx.samples(100, 15)
    failures = []
    for i in ctx.progress(range(samples), samples, "reductions"):
        n = int(rng.integers(3, 9))
        r = int(rng.integers(2, 5))
        partition = random_colouring_from(HostGraph.complete(n), r, 1, rng)
        before, _ = exact_tree_cover(partition)
        after, _ = exact_tree_cover(split_colours(partition, 2))
        if before != after:
            failures.append(f"split sample {i}: {before} -> {after}")

        k = int(rng.integers(1, r + 1))
        n = int(rng.integers(3, 8))
        colouring = random_colouring_from(HostGraph.complete(n), r, k, rng)
        before, _ = exact_tree_cover(colouring)
        twin = duplicate_vertex(colouring, int(rng.integers(0, n)), _random_k_set(rng, r, k))
        after, _ = exact_tree_cover(twin)
        if before != after:
            failures.append(f"duplicate sample {i}: {before} -> {after}")

        if k >= 2:
            drop = rng.choice(r, size=k - 1, replace=False)
            reduced, _ = exact_tree_cover(reduce_to_partition_colouring(colouring, (int(c) for c in drop)))
            if reduced < before:
                failures.append(f"reduce sample {i}: {before} -> {reduced}")
    return _verdict(failures, f"{samples} instances per reduction")


CRITERIA: Dict[int, Tuple[str, Callable[[_Context], Verdict]]] = {
    1: ("(5,2)-colourings of K_4 have tree cover number <= 2", criterion_two_missing),
    2: ("constructive bipartite covers within their bounds", criterion_bipartite_conformance),
    3: ("bipartite lower-bound witnesses", criterion_bipartite_witnesses),
    4: ("ram_3,2(K_3) = 5 by search", criterion_ram_3_2),
    5: ("ram_4,2(K_3) = 9", criterion_ram_4_2),
    6: ("closed form for ram_r,k(K_3) = 3", criterion_trivial_predicate),
    7: ("Turan bound tight at (3,2,3)", criterion_turan_tightness),
    8: ("distance codes and bipartite colour classes", criterion_codes),
    9: ("path and cycle partitions", criterion_partitions),
    10: ("transversals equal tree covers", criterion_ryser),
    11: ("edge-count inequality for critical colourings", criterion_lbn),
    12: ("reductions preserve tree cover numbers", criterion_reductions),
}


def run_suite(
    criteria: Optional[List[int]] = None,
    quick: bool = False,
    seed: Optional[int] = None,
    threads: int = 1,
) -> List[CriterionResult]:
    chosen = sorted(CRITERIA) if not criteria else criteria
    unknown = [c for c in chosen if c not in CRITERIA]
    if unknown:
        raise ParameterError(f"unknown criteria {unknown}; choose from 1..{len(CRITERIA)}")
    ctx = _Context(quick=quick, seed=DEFAULT_SEED if seed is None else seed, threads=threads)
    results: List[CriterionResult] = []
    for number in chosen:
        title, check = CRITERIA[number]
        started = time.perf_counter()
        status, detail = check(ctx)
        result = CriterionResult(number, title, status, detail, time.perf_counter() - started)
        logger.info("criterion %d %s: %s", number, status, detail)
        results.append(result)

    table = Table(title="Acceptance suite")
    table.add_column("#", justify="right")
    table.add_column("Criterion")
    table.add_column("Status")
    table.add_column("Time (s)", justify="right")
    colours = {"pass": "green", "degraded": "yellow", "fail": "red"}
    for result in results:
        table.add_row(
            str(result.number), result.title,
            f"[{colours[result.status]}]{result.status}[/{colours[result.status]}]",
            f"{result.elapsed:.1f}",
        )
    console.print(table)
    return results

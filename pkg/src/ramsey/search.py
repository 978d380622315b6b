"""
Exhaustive search for (r,k)-colourings of K_n avoiding a monochromatic target.

Edges are decided in lexicographic order and every edge tries the k-subsets
of [r] in lexicographic order, so the first colouring found is the
lexicographically first one the pruning rules let through. Pruning:

* a branch dies as soon as a decided edge closes a monochromatic target;
* with symmetry breaking on, the colour sets on vertex 0's edges must be
  lexicographically minimal under every relabelling of the colours (so the
  first edge only takes {0, ..., k-1});
* with symmetry breaking on and a triangle target, no vertex may collect
  ram_{r-1,k}(K_3) neighbours in one colour: either an edge between two of
  them carries that colour, or they span an (r-1,k)-colouring that has a
  monochromatic triangle of its own.
"""

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from enum import Enum
from itertools import permutations, product
from typing import Dict, List, Optional, Sequence, Tuple

from pydantic import BaseModel, Field

from config import DEFAULT_RAMSEY_BUDGET, KNOWN_SET_RAMSEY, MAX_COLOURS
from colouring.colour_set import ColourSet, full_set, k_subsets, members, set_key, smallest_k
from colouring.errors import BudgetExceeded, ParameterError
from colouring.io import ColouringDocument, to_document
from colouring.model import HostGraph, SetColouring
from logger import get_logger
from ramsey.bounds import trivial_ramsey_predicate
from ramsey.detect import closes_clique, closes_cycle, has_mono_subgraph
from ramsey.target import TargetGraph, TargetKind

logger = get_logger(__name__)

ADVISED_MAX_COLOURS = 16
TIME_CHECK_MASK = 0x3FF


class Outcome(str, Enum):
    AVOIDABLE = "Avoidable"
    UNAVOIDABLE = "Unavoidable"
    BUDGET_EXCEEDED = "BudgetExceeded"


@dataclass
class SymmetryStats:
    canonicity_cuts: int = 0
    neighbourhood_cuts: int = 0
    target_cuts: int = 0

    def merge(self, other: "SymmetryStats") -> None:
        self.canonicity_cuts += other.canonicity_cuts
        self.neighbourhood_cuts += other.neighbourhood_cuts
        self.target_cuts += other.target_cuts


class SearchReportDocument(BaseModel):
    kind: str = "ramsey-search"
    r: int
    k: int
    target: str
    n: int
    outcome: Outcome
    nodes: int
    wall_time: float = Field(..., description="seconds")
    symmetry: bool
    stats: Dict[str, int]
    witness: Optional[ColouringDocument] = None


@dataclass
class SearchReport:
    r: int
    k: int
    target: TargetGraph
    n: int
    outcome: Outcome
    nodes: int
    wall_time: float = 0.0
    symmetry: bool = True
    stats: SymmetryStats = field(default_factory=SymmetryStats)
    witness: Optional[SetColouring] = None

    def to_document(self) -> SearchReportDocument:
        return SearchReportDocument(
            r=self.r,
            k=self.k,
            target=str(self.target),
            n=self.n,
            outcome=self.outcome,
            nodes=self.nodes,
            wall_time=round(self.wall_time, 6),
            symmetry=self.symmetry,
            stats=asdict(self.stats),
            witness=to_document(self.witness) if self.witness is not None else None,
        )


def relabelling_beats(sequence: Sequence[ColourSet], r: int) -> bool:
    """
    Whether some permutation of the r colours turns ``sequence`` into a
    lexicographically smaller sequence of colour sets.

    Position by position, colours not yet relabelled go to the smallest
    unused targets; that is the only choice that can keep the image from
    exceeding the original, so only bijections onto those targets branch.
    """

    def walk(i: int, mapping: Dict[int, int], used: int) -> bool:
        if i == len(sequence):
            return False
        bits = sequence[i]
        fixed, fresh = 0, []
        for c in members(bits):
            if c in mapping:
                fixed |= 1 << mapping[c]
            else:
                fresh.append(c)
        lowest = smallest_k(full_set(r) & ~used, len(fresh))
        image, original = set_key(fixed | lowest), set_key(bits)
        if image != original:
            return image < original
        for targets in permutations(members(lowest)):
            extended = dict(mapping)
            extended.update(zip(fresh, targets))
            if walk(i + 1, extended, used | lowest):
                return True
        return False

    return walk(0, {}, 0)


def neighbourhood_limit(r: int, k: int, target: TargetGraph) -> Optional[int]:
    """Colour degree that forces a monochromatic triangle, when known."""
    if target.size != 3 or k >= r:
        return None
    if trivial_ramsey_predicate(r - 1, k, 3):
        return 3
    return KNOWN_SET_RAMSEY.get((r - 1, k, 3))


class _Backtracker:
    def __init__(
        self,
        r: int,
        k: int,
        target: TargetGraph,
        n: int,
        budget: int,
        symmetry: bool,
        deadline: Optional[float] = None,
    ):
        self.r, self.k, self.n = r, k, n
        self.target = target
        self.budget = budget
        self.symmetry = symmetry
        self.deadline = deadline
        self.edges = HostGraph.complete(n).edges
        self.options = k_subsets(r, k)
        self.limit = neighbourhood_limit(r, k, target) if symmetry else None
        self.closes = closes_clique if target.kind is TargetKind.CLIQUE else closes_cycle
        self.adj = [[0] * n for _ in range(r)]
        self.chosen: List[ColourSet] = []
        self.nodes = 0
        self.stats = SymmetryStats()

    def _tick(self) -> None:
        self.nodes += 1
        if self.nodes > self.budget:
            raise BudgetExceeded("ramsey search", self.nodes, self.budget)
        if self.deadline is not None and not self.nodes & TIME_CHECK_MASK and time.monotonic() > self.deadline:
            raise BudgetExceeded("ramsey search (time limit)", self.nodes, self.budget)

    def candidates(self, index: int) -> Sequence[ColourSet]:
        if self.symmetry and index == 0:
            return self.options[:1]
        return self.options

    def admissible(self, index: int, bits: ColourSet) -> bool:
        u, v = self.edges[index]
        if self.symmetry and u == 0 and index > 0 and relabelling_beats(self.chosen + [bits], self.r):
            self.stats.canonicity_cuts += 1
            return False
        for c in members(bits):
            if self.closes(self.adj[c], u, v, self.target.size):
                self.stats.target_cuts += 1
                return False
        if self.limit is not None:
            for c in members(bits):
                if max(self.adj[c][u].bit_count(), self.adj[c][v].bit_count()) + 1 >= self.limit:
                    self.stats.neighbourhood_cuts += 1
                    return False
        return True

    def place(self, bits: ColourSet) -> None:
        u, v = self.edges[len(self.chosen)]
        for c in members(bits):
            self.adj[c][u] |= 1 << v
            self.adj[c][v] |= 1 << u
        self.chosen.append(bits)

    def undo(self) -> None:
        bits = self.chosen.pop()
        u, v = self.edges[len(self.chosen)]
        for c in members(bits):
            self.adj[c][u] &= ~(1 << v)
            self.adj[c][v] &= ~(1 << u)

    def replay(self, prefix: Sequence[ColourSet]) -> None:
        while self.chosen:
            self.undo()
        for bits in prefix:
            self.place(bits)

    def run(self) -> bool:
        """Extends ``chosen`` to a full avoiding colouring; False when the subtree is exhausted."""
        self._tick()
        index = len(self.chosen)
        if index == len(self.edges):
            return True
        for bits in self.candidates(index):
            if self.admissible(index, bits):
                self.place(bits)
                if self.run():
                    return True
                self.undo()
        return False

    def frontier(self, width: int) -> List[List[ColourSet]]:
        """Admissible prefixes of the shallowest depth with at least ``width`` members, in order."""
        level: List[List[ColourSet]] = [[]]
        depth = 0
        while level and depth < len(self.edges) and len(level) < width:
            expanded = []
            for prefix in level:
                self.replay(prefix)
                for bits in self.candidates(depth):
                    self._tick()
                    if self.admissible(depth, bits):
                        expanded.append(prefix + [bits])
            level = expanded
            depth += 1
        self.replay([])
        return level


@dataclass
class _SubtreeResult:
    assignment: Optional[List[ColourSet]]
    nodes: int
    stats: SymmetryStats
    exhausted_budget: bool


def _solve_subtree(job: Tuple) -> _SubtreeResult:
    r, k, target, n, budget, symmetry, deadline, prefix = job
    engine = _Backtracker(r, k, target, n, budget, symmetry, deadline)
    engine.replay(prefix)
    try:
        found = engine.run()
    except BudgetExceeded:
        return _SubtreeResult(None, engine.nodes, engine.stats, True)
    return _SubtreeResult(list(engine.chosen) if found else None, engine.nodes, engine.stats, False)


def _check_parameters(r: int, k: int, n: int) -> None:
    if not 1 <= k <= r <= MAX_COLOURS:
        raise ParameterError(f"need 1 <= k <= r <= {MAX_COLOURS}, got r={r}, k={k}")
    if n < 1:
        raise ParameterError(f"n must be positive, got {n}")
    if r > ADVISED_MAX_COLOURS:
        logger.warning("r=%d: %d colour sets per edge, the search is unlikely to finish", r, len(k_subsets(r, k)))


def ramsey_search(
    r: int,
    k: int,
    target: TargetGraph,
    n: int,
    budget: Optional[int] = None,
    symmetry: bool = True,
    threads: int = 1,
    time_limit: Optional[float] = None,
) -> SearchReport:
    """
    Decides whether some (r,k)-colouring of K_n has no monochromatic ``target``.

    With ``threads > 1`` the subtrees below a shallow frontier go to a
    process pool; every subtree gets the full node budget, and the reported
    witness is the first one in subtree order after all workers finish.
    """
    _check_parameters(r, k, n)
    limit = DEFAULT_RAMSEY_BUDGET if budget is None else budget
    started = time.perf_counter()
    deadline = time.monotonic() + time_limit if time_limit else None
    engine = _Backtracker(r, k, target, n, limit, symmetry, deadline)
    stats = engine.stats
    assignment: Optional[List[ColourSet]] = None
    outcome = Outcome.UNAVOIDABLE
    nodes = 0
    try:
        if threads <= 1:
            if engine.run():
                assignment = list(engine.chosen)
            nodes = engine.nodes
        else:
            prefixes = engine.frontier(4 * threads)
            nodes = engine.nodes
            jobs = [(r, k, target, n, limit, symmetry, deadline, p) for p in prefixes]
            with ProcessPoolExecutor(max_workers=threads) as pool:
                results = list(pool.map(_solve_subtree, jobs))
            exceeded = False
            for result in results:
                nodes += result.nodes
                stats.merge(result.stats)
                exceeded |= result.exhausted_budget
                if assignment is None and result.assignment is not None:
                    assignment = result.assignment
            if assignment is None and exceeded:
                outcome = Outcome.BUDGET_EXCEEDED
    except BudgetExceeded as exc:
        logger.info("%s", exc)
        nodes = engine.nodes
        outcome = Outcome.BUDGET_EXCEEDED

    witness = None
    if assignment is not None:
        outcome = Outcome.AVOIDABLE
        witness = SetColouring(HostGraph.complete(n), r, tuple(assignment), k)
        found = has_mono_subgraph(witness, target)
        if found is not None:
            raise AssertionError(f"search witness has a monochromatic {target} in colour {found[0]}")
    report = SearchReport(
        r=r,
        k=k,
        target=target,
        n=n,
        outcome=outcome,
        nodes=nodes,
        wall_time=time.perf_counter() - started,
        symmetry=symmetry,
        stats=stats,
        witness=witness,
    )
    logger.info(
        "ramsey search r=%d k=%d %s n=%d: %s after %d nodes", r, k, target, n, outcome.value, nodes
    )
    return report


def exhaustive_avoiding_colouring(r: int, k: int, target: TargetGraph, n: int) -> Optional[SetColouring]:
    """Walks every (r,k)-colouring of K_n with no pruning; the first one avoiding ``target``."""
    _check_parameters(r, k, n)
    host = HostGraph.complete(n)
    for colours in product(k_subsets(r, k), repeat=host.num_edges):
        colouring = SetColouring(host, r, colours, k)
        if has_mono_subgraph(colouring, target) is None:
            return colouring
    return None

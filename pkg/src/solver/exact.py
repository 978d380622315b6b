"""
Exact monochromatic tree cover by branch-and-bound set cover.

Candidates are the maximal monochromatic components with at least two
vertices. A component found in several colours is kept once, under its
smallest colour, and components strictly inside another candidate are
dropped since a cover can always use the larger one. Vertices that no
candidate reaches are covered by forced singletons.

The search runs in two phases. The first finds the optimum value, branching
on the uncovered vertex with the fewest candidates. The second walks index
combinations in lexicographic order of (colour, smallest vertex) and stops at
the first cover of optimum size, so equal inputs give equal certificates.
"""

from dataclasses import dataclass, field
from typing import List, Optional, Tuple

from config import DEFAULT_COVER_BUDGET, MAX_EXACT_COVER_VERTICES
from colouring.colour_set import ColourSet, full_set, members, smallest
from colouring.components import spanning_tree
from colouring.errors import BudgetExceeded, ParameterError
from colouring.model import CoverCertificate, MonoComponent, SetColouring
from colouring.unionfind import UnionFind
from colouring.validation import validate
from logger import get_logger

logger = get_logger(__name__)


@dataclass
class _Candidates:
    colours: List[int]
    masks: List[int]
    forced: int
    singleton_colour: int
    coverers: List[List[int]] = field(default_factory=list)
    max_size: int = 1


def _collect_candidates(colouring: SetColouring, allowed: ColourSet) -> _Candidates:
    seen = {}
    for colour in members(allowed):
        for mask in colouring.component_masks(colour):
            if mask & (mask - 1) and mask not in seen:
                seen[mask] = colour
    masks = [m for m in seen if not any(m != o and m & o == m for o in seen)]
    masks.sort(key=lambda m: (seen[m], (m & -m).bit_length()))
    covered = 0
    for m in masks:
        covered |= m
    cands = _Candidates(
        colours=[seen[m] for m in masks],
        masks=masks,
        forced=colouring.host.all_vertices & ~covered,
        singleton_colour=smallest(allowed),
    )
    cands.coverers = [[i for i, m in enumerate(masks) if m >> v & 1] for v in range(colouring.n)]
    cands.max_size = max((m.bit_count() for m in masks), default=1)
    return cands


class _Search:
    def __init__(self, cands: _Candidates, budget: int):
        self.cands = cands
        self.budget = budget
        self.nodes = 0
        self.best: Optional[List[int]] = None

    def _tick(self) -> None:
        self.nodes += 1
        if self.nodes > self.budget:
            raise BudgetExceeded("exact tree cover", self.nodes, self.budget)

    def _lower_bound(self, uncovered: int) -> int:
        return -(-uncovered.bit_count() // self.cands.max_size)

    def greedy(self, target: int) -> List[int]:
        picks: List[int] = []
        uncovered = target
        masks = self.cands.masks
        while uncovered:
            i = max(range(len(masks)), key=lambda j: ((masks[j] & uncovered).bit_count(), -j))
            picks.append(i)
            uncovered &= ~masks[i]
        return picks

    def minimise(self, uncovered: int, picks: List[int]) -> None:
        self._tick()
        if not uncovered:
            if self.best is None or len(picks) < len(self.best):
                self.best = list(picks)
            return
        if self.best is not None and len(picks) + self._lower_bound(uncovered) >= len(self.best):
            return
        pivot = min(members(uncovered), key=lambda v: (len(self.cands.coverers[v]), v))
        masks = self.cands.masks
        order = sorted(self.cands.coverers[pivot], key=lambda i: (-(masks[i] & uncovered).bit_count(), i))
        for i in order:
            picks.append(i)
            self.minimise(uncovered & ~masks[i], picks)
            picks.pop()

    def first_lexicographic(self, target: int, size: int) -> List[int]:
        masks = self.cands.masks
        last_coverer = [max(c) if c else -1 for c in self.cands.coverers]

        def walk(uncovered: int, start: int, picks: List[int]) -> bool:
            self._tick()
            if not uncovered:
                return True
            remaining = size - len(picks)
            if remaining * self.cands.max_size < uncovered.bit_count():
                return False
            deadline = min(last_coverer[v] for v in members(uncovered))
            for i in range(start, deadline + 1):
                if not masks[i] & uncovered:
                    continue
                picks.append(i)
                if walk(uncovered & ~masks[i], i + 1, picks):
                    return True
                picks.pop()
            return False

        picks: List[int] = []
        if not walk(target, 0, picks):
            raise AssertionError("no cover of the optimum size in the lexicographic pass")
        return picks


def exact_tree_cover(
    colouring: SetColouring,
    budget: Optional[int] = None,
    allowed_colours: Optional[ColourSet] = None,
) -> Tuple[int, CoverCertificate]:
    """
    Minimum number of monochromatic trees covering every vertex.

    ``allowed_colours`` restricts the trees to a subset of the colours.
    Raises :class:`BudgetExceeded` when more than ``budget`` search nodes
    are needed.
    """
    problems = validate(colouring)
    if problems:
        raise ParameterError(f"invalid colouring: {problems[0]}")
    if colouring.n > MAX_EXACT_COVER_VERTICES:
        raise ParameterError(f"exact cover supports at most {MAX_EXACT_COVER_VERTICES} vertices")
    allowed = full_set(colouring.r) if allowed_colours is None else allowed_colours & full_set(colouring.r)
    if not allowed:
        raise ParameterError("allowed colour set is empty")

    cands = _collect_candidates(colouring, allowed)
    search = _Search(cands, DEFAULT_COVER_BUDGET if budget is None else budget)
    target = colouring.host.all_vertices & ~cands.forced

    search.best = search.greedy(target)
    greedy_size = len(search.best)
    search.minimise(target, [])
    optimum = len(search.best)
    picks = search.first_lexicographic(target, optimum) if optimum else []

    trees = [
        MonoComponent(cands.colours[i], cands.masks[i], spanning_tree(colouring, cands.colours[i], cands.masks[i]))
        for i in picks
    ]
    trees.extend(MonoComponent(cands.singleton_colour, 1 << v) for v in members(cands.forced))
    certificate = CoverCertificate(tuple(trees)).canonical()
    logger.debug(
        "exact cover of %s: %d candidates, greedy %d, optimum %d, %d nodes",
        colouring.describe(), len(cands.masks), greedy_size + cands.forced.bit_count(),
        certificate.size, search.nodes,
    )
    return certificate.size, certificate


def verify_cover(colouring: SetColouring, certificate: CoverCertificate) -> List[str]:
    """Every reason ``certificate`` fails to be a monochromatic tree cover; empty when valid."""
    problems: List[str] = []
    host = colouring.host
    everything = host.all_vertices
    for index, tree in enumerate(certificate.trees):
        where = f"tree {index} (colour {tree.colour})"
        if not 0 <= tree.colour < colouring.r:
            problems.append(f"{where}: colour outside 0..{colouring.r - 1}")
            continue
        if not tree.vertices:
            problems.append(f"{where}: no vertices")
            continue
        if tree.vertices & ~everything:
            problems.append(f"{where}: vertex outside {host.describe()}")
            continue
        problems.extend(_tree_problems(colouring, tree, where))
    uncovered = everything & ~certificate.covered
    problems.extend(f"vertex {v} uncovered" for v in members(uncovered))
    return problems


def _tree_problems(colouring: SetColouring, tree: MonoComponent, where: str) -> List[str]:
    problems: List[str] = []
    if len(tree.tree_edges) != tree.size - 1:
        problems.append(f"{where}: {len(tree.tree_edges)} edges for {tree.size} vertices")
    index = {v: i for i, v in enumerate(tree.vertex_list)}
    forest = UnionFind(tree.size)
    for u, v in tree.tree_edges:
        if u not in index or v not in index:
            problems.append(f"{where}: edge ({u}, {v}) leaves the vertex set")
            continue
        if not colouring.host.has_edge(u, v):
            problems.append(f"{where}: ({u}, {v}) is not a host edge")
            continue
        if not colouring.colour_set(u, v) >> tree.colour & 1:
            problems.append(f"{where}: edge ({u}, {v}) lacks colour {tree.colour}")
        if not forest.union(index[u], index[v]):
            problems.append(f"{where}: edge ({u}, {v}) closes a cycle")
    if forest.sets != 1 and not problems:
        problems.append(f"{where}: tree edges do not connect its vertices")
    return problems


def is_cover(colouring: SetColouring, certificate: CoverCertificate) -> bool:
    return not verify_cover(colouring, certificate)

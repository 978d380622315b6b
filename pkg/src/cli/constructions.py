"""
Named constructions for ``construct`` and the claims ``--check`` verifies.

A claim check returns the list of ways the built colouring falls short of
what its construction promises; an empty list means the witness holds.
"""

from dataclasses import dataclass
from typing import Callable, Dict, List, Tuple

from colouring.model import SetColouring
from generator.affine import affine_tree_cover_colouring, turan_affine_colouring
from generator.bipartite import (
    bipartite_subsets_colouring,
    bipartite_tuples_colouring,
    tuple_lower_bound,
    tuples_matching_cover,
)
from generator.codes import code_colouring, distance_code
from generator.complete import loboco_colouring, path_partition_lb_colouring, two_missing_colouring
from generator.cycles import doubling_cycle_colouring
from ramsey.detect import has_mono_subgraph
from ramsey.target import TargetGraph
from solver.exact import exact_tree_cover, verify_cover
from solver.partition import exact_cycle_partition, exact_path_partition


@dataclass(frozen=True)
class Construction:
    name: str
    params: Tuple[str, ...]
    build: Callable[..., SetColouring]
    check: Callable[[SetColouring, Dict[str, int], int], List[str]]
    summary: str = ""


def _cover_at_least(colouring: SetColouring, bound: int, budget: int) -> List[str]:
    value, _ = exact_tree_cover(colouring, budget)
    return [] if value >= bound else [f"tree cover number {value} < {bound}"]


def _cover_equals(colouring: SetColouring, expected: int, budget: int) -> List[str]:
    value, _ = exact_tree_cover(colouring, budget)
    return [] if value == expected else [f"tree cover number {value} != {expected}"]


def _free_of(colouring: SetColouring, target: TargetGraph) -> List[str]:
    found = has_mono_subgraph(colouring, target)
    if found is None:
        return []
    colour, vertices = found
    return [f"monochromatic {target} in colour {colour} on {list(vertices)}"]


def _check_tuples(colouring: SetColouring, p: Dict[str, int], budget: int) -> List[str]:
    r, k = p["r"], p["k"]
    bound = tuple_lower_bound(r, k)
    cover = tuples_matching_cover(colouring)
    problems = [f"matching cover: {msg}" for msg in verify_cover(colouring, cover)]
    if cover.size > bound:
        problems.append(f"matching cover has {cover.size} trees, expected {bound}")
    return problems + _cover_at_least(colouring, bound, budget)


def _check_path_lb(colouring: SetColouring, p: Dict[str, int], budget: int) -> List[str]:
    problems = []
    for name, solve in (("path", exact_path_partition), ("cycle", exact_cycle_partition)):
        value, _ = solve(colouring, budget)
        if value < 2:
            problems.append(f"a single monochromatic {name} spans all vertices")
    return problems


CONSTRUCTIONS: Dict[str, Construction] = {
    c.name: c
    for c in (
        Construction(
            "affine", ("q",),
            lambda q: affine_tree_cover_colouring(q),
            lambda col, p, b: _cover_equals(col, p["q"], b),
            "(q+1,1)-colouring of K_{q^2} by parallel classes; tree cover number q",
        ),
        Construction(
            "two-missing", ("r",),
            lambda r: two_missing_colouring(r),
            lambda col, p, b: _cover_equals(col, 2, b),
            "(r,r-2)-colouring of K_r, edge ij misses i and j; tree cover number 2",
        ),
        Construction(
            "bip-subsets", ("r", "k", "m"),
            lambda r, k, m: bipartite_subsets_colouring(r, k, m),
            lambda col, p, b: _cover_at_least(col, p["r"] - p["k"] + 1, b),
            "K_{C(r,k),m} coloured by the k-subsets; tree cover number >= r-k+1",
        ),
        Construction(
            "bip-tuples", ("r", "k"),
            lambda r, k: bipartite_tuples_colouring(r, k),
            _check_tuples,
            "tuples of disjoint k-sets; tree cover number r-k+floor(r/k)-1",
        ),
        Construction(
            "turan-affine", ("q",),
            lambda q: turan_affine_colouring(q),
            lambda col, p, b: _free_of(col, TargetGraph.clique(p["q"] + 1)),
            "(q+1,q)-colouring of K_{q^2} without a monochromatic K_{q+1}",
        ),
        Construction(
            "doubling-cycle", ("r", "k", "length"),
            lambda r, k, length: doubling_cycle_colouring(r, k, length),
            lambda col, p, b: _free_of(col, TargetGraph.odd_cycle(p["length"])),
            "doubling construction without a monochromatic C_length",
        ),
        Construction(
            "code", ("r", "k"),
            lambda r, k: code_colouring(distance_code(r, k), k),
            lambda col, p, b: _free_of(col, TargetGraph.odd_cycle(3)),
            "binary code colouring with bipartite colour classes",
        ),
        Construction(
            "path-lb", ("r",),
            lambda r: path_partition_lb_colouring(r),
            _check_path_lb,
            "(r,r-1)-colouring with no spanning monochromatic path or cycle",
        ),
        Construction(
            "loboco", ("q", "k", "n"),
            lambda q, k, n: loboco_colouring(q, k, n),
            lambda col, p, b: _cover_at_least(col, p["q"], b),
            "split affine colouring blown up to K_n; tree cover number >= q",
        ),
    )
}


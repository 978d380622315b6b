"""
Complete bipartite colourings with large tree cover number.

Both constructions put the "colour carrying" vertices on side A: a vertex of
A owns a colour set (or a tuple of disjoint colour sets) and its edges take
their colours from it.
"""

from math import comb
from typing import List, Tuple

from config import MAX_GENERATED_VERTICES
from colouring.colour_set import ColourSet, k_subsets, smallest
from colouring.errors import ParameterError
from colouring.model import CoverCertificate, HostGraph, MonoComponent, SetColouring
from colouring.reductions import star_cover


def bipartite_subsets_colouring(r: int, k: int, m: int) -> SetColouring:
    """K_{C(r,k), m} where A-vertex u is the u-th k-subset and colours all its edges with it."""
    if not 1 <= k < r:
        raise ParameterError(f"need 1 <= k < r, got r={r}, k={k}")
    if m < 1:
        raise ParameterError(f"need m >= 1, got {m}")
    if comb(r, k) > MAX_GENERATED_VERTICES:
        raise ParameterError(f"C({r},{k}) exceeds {MAX_GENERATED_VERTICES} vertices")
    subsets = k_subsets(r, k)
    host = HostGraph.bipartite(len(subsets), m)
    return SetColouring.from_function(host, r, k, lambda a, b: subsets[a])


def disjoint_tuples(r: int, k: int, m: int) -> List[Tuple[ColourSet, ...]]:
    """All m-tuples of pairwise disjoint k-subsets of [r], lexicographically."""
    subsets = k_subsets(r, k)
    out: List[Tuple[ColourSet, ...]] = []

    def extend(prefix: Tuple[ColourSet, ...], used: ColourSet) -> None:
        if len(prefix) == m:
            out.append(prefix)
            return
        for s in subsets:
            if not s & used:
                extend(prefix + (s,), used | s)

    extend((), 0)
    return out


def tuples_side_size(r: int, k: int) -> int:
    """Product of C(r - ik, k) for i < floor(r/k) - 1: the size of the tuple side."""
    total = 1
    for i in range(r // k - 1):
        total *= comb(r - i * k, k)
    return total


def bipartite_tuples_colouring(r: int, k: int) -> SetColouring:
    """
    K_{|T|, m} with m = floor(r/k) - 1, where T lists m-tuples of disjoint k-sets.

    Tuple vertex x (side A) meets index vertex i (side B) in colour set x_i.
    Tree cover number is r - k + floor(r/k) - 1.
    """
    if k < 1 or r // k < 2:
        raise ParameterError(f"need floor(r/k) >= 2, got r={r}, k={k}")
    m = r // k - 1
    if tuples_side_size(r, k) > MAX_GENERATED_VERTICES:
        raise ParameterError(f"tuple side for r={r}, k={k} exceeds {MAX_GENERATED_VERTICES} vertices")
    tuples = disjoint_tuples(r, k, m)
    host = HostGraph.bipartite(len(tuples), m)
    return SetColouring.from_function(host, r, k, lambda a, b: tuples[a][b - host.n])


def tuples_matching_cover(colouring: SetColouring) -> CoverCertificate:
    """
    Cover of size r - k + m for a colouring from :func:`bipartite_tuples_colouring`.

    r - k + 1 stars at the first index vertex reach every tuple vertex; each
    further index vertex is covered by one edge to tuple vertex 0.
    """
    host = colouring.host
    if not host.is_bipartite or colouring.k is None:
        raise ParameterError("tuples_matching_cover needs a uniform bipartite colouring")
    r, k = colouring.r, colouring.k
    pool = range(r - k + 1)
    trees = list(star_cover(colouring, host.n, pool).trees)
    for index_vertex in list(host.side_b)[1:]:
        colour = smallest(colouring.colour_set(0, index_vertex))
        trees.append(MonoComponent(colour, 1 | 1 << index_vertex, ((0, index_vertex),)))
    return CoverCertificate(tuple(trees))


def tuple_lower_bound(r: int, k: int) -> int:
    return r - k + r // k - 1

"""
Hypergraphs and set-coloured graphs on their edges.

Edges e, f of an r-partite hypergraph become adjacent vertices whose colour
set is the set of parts where e and f share a vertex. A colour-c component
is then a set of edges through one part-c vertex, so monochromatic tree
covers of the graph and transversals of the hypergraph correspond.
"""

from dataclasses import dataclass
from typing import Dict, List, Tuple

from colouring.colour_set import members, smallest_k
from colouring.errors import ParameterError
from colouring.model import CoverCertificate, HostGraph, SetColouring
from logger import get_logger
from ryser.hypergraph import Hypergraph, Vertex, intersection_level, is_intersecting
from solver.constructive import complete_bound, constructive_cover_complete

logger = get_logger(__name__)


def hypergraph_to_colouring(h: Hypergraph) -> SetColouring:
    """
    Generalized colouring of K_{|E|}; marked partial unless ``h`` is intersecting,
    in which case disjoint edge pairs get the empty set.
    """
    if not h.edges:
        raise ParameterError("hypergraph has no edges")

    def shared_parts(u: int, v: int) -> int:
        return sum(1 << p for p, (a, b) in enumerate(zip(h.edges[u], h.edges[v])) if a == b)

    return SetColouring.from_function(
        HostGraph.complete(h.num_edges), h.r, None, shared_parts, partial=not is_intersecting(h)
    )


def _require_complete(colouring: SetColouring, what: str) -> None:
    if colouring.host.is_bipartite:
        raise ParameterError(f"{what} needs a complete host, got {colouring.host.describe()}")


def saturate(colouring: SetColouring) -> SetColouring:
    """Adds colour c to every edge inside a colour-c component."""
    _require_complete(colouring, "saturate")
    block: List[List[int]] = []
    for c in range(colouring.r):
        owner = [0] * colouring.n
        for i, mask in enumerate(colouring.component_masks(c)):
            for v in members(mask):
                owner[v] = i
        block.append(owner)

    def closed(u: int, v: int) -> int:
        return sum(1 << c for c in range(colouring.r) if block[c][u] == block[c][v])

    return SetColouring.from_function(colouring.host, colouring.r, None, closed, colouring.partial)


def is_saturated(colouring: SetColouring) -> bool:
    return saturate(colouring).colours == colouring.colours


def colouring_to_hypergraph(colouring: SetColouring) -> Hypergraph:
    """
    One part per colour whose vertices are the colour's components.

    Vertices on no colour-c edge are their own singleton component, so every
    graph vertex has a block in every part and becomes an r-tuple.
    """
    _require_complete(colouring, "colouring_to_hypergraph")
    if not is_saturated(colouring):
        raise ParameterError("colouring is not saturated: some monochromatic component is not complete")
    part_sizes = []
    rows = [[0] * colouring.r for _ in range(colouring.n)]
    for c in range(colouring.r):
        components = colouring.component_masks(c)
        part_sizes.append(len(components))
        for i, mask in enumerate(components):
            for v in members(mask):
                rows[v][c] = i
    return Hypergraph(tuple(part_sizes), tuple(tuple(row) for row in rows))


@dataclass
class RyserResult:
    transversal: Tuple[Vertex, ...]
    bound: int
    level: int
    certificate: CoverCertificate

    @property
    def size(self) -> int:
        return len(self.transversal)

    def as_dict(self) -> Dict:
        return {
            "size": self.size,
            "bound": self.bound,
            "level": self.level,
            "transversal": [list(v) for v in self.transversal],
        }


def ryser_transversal(h: Hypergraph, k: int) -> RyserResult:
    """
    A transversal of a k-intersecting hypergraph of size at most r-k
    (k >= r/2 - 1) or r-k+1 otherwise.

    Colour sets are cut to their k smallest colours; a colour-c tree of
    the resulting (r,k)-colouring lies inside one original colour-c component,
    so all of its edges pass through the part-c vertex of its first edge.
    """
    if k < 1:
        raise ParameterError(f"intersection level must be >= 1, got {k}")
    level = intersection_level(h) if h.edges else 0
    if not h.edges or level < k:
        raise ParameterError(f"hypergraph is not {k}-intersecting (level {level})")
    graph = hypergraph_to_colouring(h)
    trimmed = SetColouring.from_function(
        graph.host, h.r, k, lambda u, v: smallest_k(graph.colour_set(u, v), k)
    )
    certificate = constructive_cover_complete(trimmed)
    chosen = sorted({(tree.colour, h.edges[tree.smallest_vertex][tree.colour]) for tree in certificate.trees})
    if not h.is_transversal(chosen):
        raise AssertionError(f"{chosen} misses an edge of the hypergraph")
    bound = complete_bound(h.r, k, h.num_edges)
    logger.info("transversal of size %d for a %d-intersecting %d-partite hypergraph (bound %d)", len(chosen), k, h.r, bound)
    return RyserResult(tuple(chosen), bound, level, certificate)

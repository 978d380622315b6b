"""
r-partite r-uniform hypergraphs.

A vertex is a pair ``(part, index)``. An edge lists one index per part, so
edge ``e`` contains the vertices ``(p, e[p])``. Edges form a multiset: two
vertices of a set-coloured graph can sit in exactly the same blocks.
"""

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import List, Optional, Tuple

import networkx as nx
import numpy as np
from pydantic import BaseModel, Field, ValidationError

from config import DEFAULT_HYPERGRAPH_BUDGET, MAX_COLOURS
from colouring.errors import BudgetExceeded, ColouringParseError, ParameterError
from colouring.sampling import make_rng
from logger import get_logger

logger = get_logger(__name__)

Vertex = Tuple[int, int]
HyperEdge = Tuple[int, ...]


@dataclass(frozen=True)
class Hypergraph:
    part_sizes: Tuple[int, ...]
    edges: Tuple[HyperEdge, ...]

    def __post_init__(self):
        if not 1 <= len(self.part_sizes) <= MAX_COLOURS:
            raise ParameterError(f"need 1..{MAX_COLOURS} parts, got {len(self.part_sizes)}")
        if any(size < 1 for size in self.part_sizes):
            raise ParameterError("every part needs at least one vertex")
        for i, edge in enumerate(self.edges):
            if len(edge) != self.r:
                raise ParameterError(f"edge {i} has {len(edge)} vertices, expected {self.r}")
            for part, index in enumerate(edge):
                if not 0 <= index < self.part_sizes[part]:
                    raise ParameterError(f"edge {i}: index {index} outside part {part} of size {self.part_sizes[part]}")

    @property
    def r(self) -> int:
        return len(self.part_sizes)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    @cached_property
    def _offsets(self) -> Tuple[int, ...]:
        return tuple(int(x) for x in np.concatenate([[0], np.cumsum(self.part_sizes)[:-1]]))

    def vertex_id(self, vertex: Vertex) -> int:
        part, index = vertex
        return self._offsets[part] + index

    def vertex_at(self, vid: int) -> Vertex:
        part = max(p for p, start in enumerate(self._offsets) if start <= vid)
        return part, vid - self._offsets[part]

    @cached_property
    def edge_masks(self) -> Tuple[int, ...]:
        """Each edge as a bit vector over global vertex ids."""
        return tuple(sum(1 << self.vertex_id((p, i)) for p, i in enumerate(edge)) for edge in self.edges)

    def meets(self, e: int, f: int) -> int:
        """Number of parts in which edges ``e`` and ``f`` share their vertex."""
        return sum(a == b for a, b in zip(self.edges[e], self.edges[f]))

    def is_transversal(self, vertices) -> bool:
        mask = sum(1 << self.vertex_id(v) for v in set(vertices))
        return all(edge & mask for edge in self.edge_masks)


def intersection_level(h: Hypergraph) -> int:
    """Largest k with every two edges meeting in at least k parts (r for fewer than two edges)."""
    return min((h.meets(e, f) for e, f in combinations(range(h.num_edges), 2)), default=h.r)


def is_intersecting(h: Hypergraph) -> bool:
    return intersection_level(h) >= 1


class _Budget:
    def __init__(self, what: str, budget: Optional[int]):
        self.what = what
        self.limit = DEFAULT_HYPERGRAPH_BUDGET if budget is None else budget
        self.nodes = 0

    def tick(self) -> None:
        self.nodes += 1
        if self.nodes > self.limit:
            raise BudgetExceeded(self.what, self.nodes, self.limit)


def _disjoint_count(masks: List[int]) -> int:
    """Size of a greedy matching, a lower bound on any transversal of ``masks``."""
    used, count = 0, 0
    for mask in masks:
        if not mask & used:
            used |= mask
            count += 1
    return count


def transversal_exact(h: Hypergraph, budget: Optional[int] = None) -> Tuple[int, Tuple[Vertex, ...]]:
    """
    A smallest vertex set meeting every edge.

    Sizes are tried in increasing order; each level branches on the vertices
    of the first edge not yet hit, so the first hit at size s is optimal.
    """
    counter = _Budget("exact transversal", budget)
    masks = list(h.edge_masks)

    def search(hit: int, chosen: List[int], left: int) -> bool:
        counter.tick()
        open_edges = [m for m in masks if not m & hit]
        if not open_edges:
            return True
        if _disjoint_count(open_edges) > left:
            return False
        first = open_edges[0]
        while first:
            low = first & -first
            first ^= low
            chosen.append(low.bit_length() - 1)
            if search(hit | low, chosen, left - 1):
                return True
            chosen.pop()
        return False

    size = _disjoint_count(masks)
    while True:
        chosen: List[int] = []
        if search(0, chosen, size):
            vertices = tuple(sorted(h.vertex_at(v) for v in chosen))
            logger.debug("transversal of %d edges: %d, %d nodes", h.num_edges, len(vertices), counter.nodes)
            return len(vertices), vertices
        size += 1


def matching_number(h: Hypergraph, budget: Optional[int] = None) -> int:
    counter = _Budget("matching number", budget)
    masks = h.edge_masks
    best = 0

    def extend(i: int, used: int, count: int) -> None:
        nonlocal best
        counter.tick()
        best = max(best, count)
        if i == len(masks) or count + len(masks) - i <= best:
            return
        if not masks[i] & used:
            extend(i + 1, used | masks[i], count + 1)
        extend(i + 1, used, count)

    extend(0, 0, 0)
    return best


def _greedy_family(rng, r: int, k: int, num_edges: int, part_size: int, max_tries: int):
    first = tuple(int(x) for x in rng.integers(0, part_size, size=r))
    edges = [first]
    for _ in range(max_tries):
        if len(edges) == num_edges:
            break
        candidate = list(first)
        for part in rng.choice(r, size=r - k, replace=False):
            candidate[int(part)] = int(rng.integers(0, part_size))
        candidate = tuple(candidate)
        if candidate in edges:
            continue
        if all(sum(a == b for a, b in zip(candidate, e)) >= k for e in edges):
            edges.append(candidate)
    return edges if len(edges) == num_edges else None


def _core_family(rng, r: int, k: int, num_edges: int, part_size: int):
    # edges agree on k fixed parts, so every pair meets in at least k parts
    core_parts = sorted(int(p) for p in rng.choice(r, size=k, replace=False))
    core = {p: int(rng.integers(0, part_size)) for p in core_parts}
    free = [p for p in range(r) if p not in core]
    edges = []
    for index in rng.choice(part_size ** len(free), size=num_edges, replace=False):
        index = int(index)
        edge = [0] * r
        for p in core_parts:
            edge[p] = core[p]
        for p in free:
            index, edge[p] = divmod(index, part_size)
        edges.append(tuple(edge))
    return edges


def random_intersecting_hypergraph(
    r: int,
    k: int,
    num_edges: int,
    part_size: int,
    seed: Optional[int] = 0,
    max_tries: int = 10_000,
    restarts: int = 8,
) -> Hypergraph:
    """
    ``num_edges`` distinct edges pairwise meeting in at least k parts.

    Candidates copy a random seed edge and redraw r-k random parts; a
    candidate is kept when it meets every kept edge in k parts. A stuck
    family is dropped and regrown from a fresh seed edge, up to ``restarts``
    times. After that the edges are drawn around a shared core of k parts,
    which succeeds whenever ``part_size ** (r - k) >= num_edges``.
    """
    if not 1 <= k <= r:
        raise ParameterError(f"need 1 <= k <= r, got r={r}, k={k}")
    if num_edges < 1 or part_size < 1:
        raise ParameterError("need at least one edge and one vertex per part")
    rng = make_rng(seed)
    per_attempt = max(1, max_tries // max(restarts, 1))
    for attempt in range(restarts):
        edges = _greedy_family(rng, r, k, num_edges, part_size, per_attempt)
        if edges is not None:
            return Hypergraph(tuple([part_size] * r), tuple(edges))
        logger.debug("restart %d of the greedy family for (r,k)=(%d,%d)", attempt + 1, r, k)
    if part_size ** (r - k) < num_edges:
        raise ParameterError(
            f"no {num_edges} distinct {k}-intersecting edges found with {part_size} vertices per part"
        )
    edges = _core_family(rng, r, k, num_edges, part_size)
    return Hypergraph(tuple([part_size] * r), tuple(edges))


def _incidence_graph(h: Hypergraph) -> nx.Graph:
    graph = nx.Graph()
    for i, edge in enumerate(h.edges):
        graph.add_node(("e", i), part=-1)
        for part, index in enumerate(edge):
            graph.add_node(("v", part, index), part=part)
            graph.add_edge(("e", i), ("v", part, index))
    return graph


def hypergraphs_isomorphic(h1: Hypergraph, h2: Hypergraph) -> bool:
    """Isomorphism that keeps every vertex in its part; vertices on no edge are ignored."""
    if h1.r != h2.r or h1.num_edges != h2.num_edges:
        return False
    return nx.is_isomorphic(
        _incidence_graph(h1),
        _incidence_graph(h2),
        node_match=lambda a, b: a["part"] == b["part"],
    )


class HypergraphDocument(BaseModel):
    kind: str = "hypergraph"
    part_sizes: List[int]
    edges: List[List[int]] = Field(default_factory=list)


def to_document(h: Hypergraph) -> HypergraphDocument:
    return HypergraphDocument(part_sizes=list(h.part_sizes), edges=[list(e) for e in h.edges])


def _build(part_sizes, edges, line: Optional[int] = None) -> Hypergraph:
    try:
        return Hypergraph(tuple(part_sizes), tuple(tuple(e) for e in edges))
    except ParameterError as exc:
        raise ColouringParseError(str(exc), line, "edge") from exc


def parse_hypergraph(text: str) -> Hypergraph:
    """
    Reads JSON or the text form::

        parts 2 2 2
        0 0 0
        0 1 1
    """
    if text.lstrip().startswith("{"):
        try:
            doc = HypergraphDocument.model_validate_json(text)
        except ValidationError as exc:
            raise ColouringParseError(exc.errors()[0]["msg"], None, "hypergraph") from exc
        return _build(doc.part_sizes, doc.edges)

    part_sizes: Optional[List[int]] = None
    edges: List[List[int]] = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        try:
            values = [int(t) for t in tokens[1:]] if tokens[0] == "parts" else [int(t) for t in tokens]
        except ValueError as exc:
            raise ColouringParseError(f"expected integers, got {line!r}", number, "token") from exc
        if tokens[0] == "parts":
            if part_sizes is not None:
                raise ColouringParseError("duplicate parts header", number, "parts")
            part_sizes = values
        elif part_sizes is None:
            raise ColouringParseError("edge before the parts header", number, "parts")
        elif len(values) != len(part_sizes):
            raise ColouringParseError(f"edge needs {len(part_sizes)} indices, got {len(values)}", number, "edge")
        else:
            edges.append(values)
    if part_sizes is None:
        raise ColouringParseError("missing parts header", None, "parts")
    return _build(part_sizes, edges)


def serialize_hypergraph(h: Hypergraph, as_json: bool = False) -> str:
    if as_json:
        return to_document(h).model_dump_json(indent=2) + "\n"
    lines = ["parts " + " ".join(map(str, h.part_sizes))]
    lines.extend(" ".join(map(str, edge)) for edge in h.edges)
    return "\n".join(lines) + "\n"

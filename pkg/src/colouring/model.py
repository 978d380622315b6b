"""
Data model for set-coloured complete and complete bipartite graphs.

Vertices are integers. A complete host ``K_n`` has vertices ``0..n-1``; a
complete bipartite host ``K_{n,m}`` has side A = ``0..n-1`` and side
B = ``n..n+m-1``. Host edges are indexed in lexicographic order of their
``(min, max)`` endpoint pairs, which for bipartite hosts is A-major.
Vertex sets and colour sets are both int bit vectors.
"""

from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from typing import Callable, Dict, Iterator, List, Optional, Tuple

from config import MAX_COLOURS
from colouring.colour_set import ColourSet, members
from colouring.errors import ParameterError

Edge = Tuple[int, int]


class HostKind(str, Enum):
    COMPLETE = "complete"
    BIPARTITE = "bipartite"


@dataclass(frozen=True)
class HostGraph:
    kind: HostKind
    n: int
    m: int = 0

    def __post_init__(self):
        object.__setattr__(self, "kind", HostKind(self.kind))
        if self.n < 1:
            raise ParameterError(f"host needs n >= 1, got n={self.n}")
        if self.kind is HostKind.BIPARTITE and self.m < 1:
            raise ParameterError(f"bipartite host needs m >= 1, got m={self.m}")
        if self.kind is HostKind.COMPLETE and self.m != 0:
            raise ParameterError("complete host takes no second side")

    @classmethod
    def complete(cls, n: int) -> "HostGraph":
        return cls(HostKind.COMPLETE, n)

    @classmethod
    def bipartite(cls, n: int, m: int) -> "HostGraph":
        return cls(HostKind.BIPARTITE, n, m)

    @property
    def is_bipartite(self) -> bool:
        return self.kind is HostKind.BIPARTITE

    @property
    def num_vertices(self) -> int:
        return self.n + self.m

    @property
    def num_edges(self) -> int:
        if self.is_bipartite:
            return self.n * self.m
        return self.n * (self.n - 1) // 2

    @property
    def all_vertices(self) -> int:
        return (1 << self.num_vertices) - 1

    @property
    def side_a(self) -> range:
        return range(self.n)

    @property
    def side_b(self) -> range:
        return range(self.n, self.n + self.m)

    def side_mask(self, side: str) -> int:
        if side == "A":
            return (1 << self.n) - 1
        return ((1 << self.m) - 1) << self.n

    def in_side_a(self, v: int) -> bool:
        return v < self.n

    def has_edge(self, u: int, v: int) -> bool:
        total = self.num_vertices
        if u == v or not (0 <= u < total and 0 <= v < total):
            return False
        if self.is_bipartite:
            return (u < self.n) != (v < self.n)
        return True

    def edge_index(self, u: int, v: int) -> int:
        if not self.has_edge(u, v):
            raise ParameterError(f"({u}, {v}) is not an edge of {self.describe()}")
        a, b = (u, v) if u < v else (v, u)
        if self.is_bipartite:
            return a * self.m + (b - self.n)
        return a * self.n - a * (a + 1) // 2 + (b - a - 1)

    @cached_property
    def edges(self) -> Tuple[Edge, ...]:
        if self.is_bipartite:
            return tuple((a, b) for a in self.side_a for b in self.side_b)
        return tuple((a, b) for a in range(self.n) for b in range(a + 1, self.n))

    def neighbours(self, v: int) -> range:
        if self.is_bipartite:
            return self.side_b if v < self.n else self.side_a
        return range(self.n)

    def describe(self) -> str:
        if self.is_bipartite:
            return f"K_{{{self.n},{self.m}}}"
        return f"K_{self.n}"


@dataclass(frozen=True)
class SetColouring:
    """
    An assignment of colour sets to every host edge.

    ``k`` is the uniform set size of an (r,k)-colouring or ``None`` for
    generalized colourings with variable-size sets. ``partial`` marks
    colourings where an empty set means "no edge" (hypergraph intersection
    graphs that are not intersecting).
    """

    host: HostGraph
    r: int
    colours: Tuple[ColourSet, ...]
    k: Optional[int] = None
    partial: bool = False
    _memo: Dict = field(default_factory=dict, init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        if not 1 <= self.r <= MAX_COLOURS:
            raise ParameterError(f"r must lie in 1..{MAX_COLOURS}, got {self.r}")
        if len(self.colours) != self.host.num_edges:
            raise ParameterError(
                f"{self.host.describe()} has {self.host.num_edges} edges, "
                f"got {len(self.colours)} colour sets"
            )

    @classmethod
    def from_function(
        cls,
        host: HostGraph,
        r: int,
        k: Optional[int],
        colour_fn: Callable[[int, int], ColourSet],
        partial: bool = False,
    ) -> "SetColouring":
        return cls(host, r, tuple(colour_fn(u, v) for u, v in host.edges), k, partial)

    @property
    def n(self) -> int:
        return self.host.num_vertices

    def colour_set(self, u: int, v: int) -> ColourSet:
        return self.colours[self.host.edge_index(u, v)]

    def iter_edges(self) -> Iterator[Tuple[int, int, ColourSet]]:
        for (u, v), bits in zip(self.host.edges, self.colours):
            yield u, v, bits

    def adjacency(self, colour: int) -> Tuple[int, ...]:
        """Neighbour bit vectors of every vertex in the colour-``colour`` subgraph."""
        key = ("adj", colour)
        if key not in self._memo:
            adj = [0] * self.n
            bit = 1 << colour
            for (u, v), bits in zip(self.host.edges, self.colours):
                if bits & bit:
                    adj[u] |= 1 << v
                    adj[v] |= 1 << u
            self._memo[key] = tuple(adj)
        return self._memo[key]

    def component_masks(self, colour: int) -> Tuple[int, ...]:
        """Vertex sets of the colour components, singletons included, by smallest vertex."""
        key = ("comp", colour)
        if key not in self._memo:
            adj = self.adjacency(colour)
            seen = 0
            comps: List[int] = []
            for v in range(self.n):
                if seen >> v & 1:
                    continue
                comp = frontier = 1 << v
                while frontier:
                    low = frontier & -frontier
                    frontier ^= low
                    fresh = adj[low.bit_length() - 1] & ~comp
                    comp |= fresh
                    frontier |= fresh
                seen |= comp
                comps.append(comp)
            self._memo[key] = tuple(comps)
        return self._memo[key]

    def component_containing(self, colour: int, v: int) -> int:
        for comp in self.component_masks(colour):
            if comp >> v & 1:
                return comp
        raise ParameterError(f"vertex {v} is not in {self.host.describe()}")

    def seen_colours(self, v: int) -> ColourSet:
        """Colours on at least one edge at ``v``."""
        seen = 0
        for u in self.host.neighbours(v):
            if u != v:
                seen |= self.colour_set(u, v)
        return seen

    def colour_list(self, u: int, v: int) -> Tuple[int, ...]:
        return members(self.colour_set(u, v))

    def describe(self) -> str:
        k = "*" if self.k is None else str(self.k)
        return f"({self.r},{k})-colouring of {self.host.describe()}"


@dataclass(frozen=True)
class MonoComponent:
    """A monochromatic tree: a colour, its vertex set and a spanning tree."""

    colour: int
    vertices: int
    tree_edges: Tuple[Edge, ...] = ()

    @property
    def size(self) -> int:
        return self.vertices.bit_count()

    @property
    def vertex_list(self) -> Tuple[int, ...]:
        return members(self.vertices)

    @property
    def smallest_vertex(self) -> int:
        return (self.vertices & -self.vertices).bit_length() - 1

    def sort_key(self) -> Tuple[int, int]:
        return (self.colour, self.smallest_vertex)


@dataclass(frozen=True)
class CoverCertificate:
    trees: Tuple[MonoComponent, ...]

    @property
    def size(self) -> int:
        return len(self.trees)

    @property
    def covered(self) -> int:
        mask = 0
        for tree in self.trees:
            mask |= tree.vertices
        return mask

    def canonical(self) -> "CoverCertificate":
        return CoverCertificate(tuple(sorted(self.trees, key=MonoComponent.sort_key)))

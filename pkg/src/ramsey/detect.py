"""
Monochromatic clique and odd-cycle detection on bit-vector colour graphs.

The helpers take a colour graph as a tuple of neighbour masks so that the
exhaustive search can run them on its partial colourings as well.
"""

from typing import List, Optional, Sequence, Tuple

import networkx as nx

from colouring.colour_set import members
from colouring.model import SetColouring
from ramsey.target import TargetGraph, TargetKind

Witness = Tuple[int, Tuple[int, ...]]


def find_clique(adj: Sequence[int], size: int, candidates: int) -> Optional[Tuple[int, ...]]:
    """Lexicographically first clique of ``size`` vertices inside ``candidates``."""
    if size == 0:
        return ()
    chosen: List[int] = []

    def extend(cand: int) -> bool:
        if len(chosen) == size:
            return True
        if len(chosen) + cand.bit_count() < size:
            return False
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            chosen.append(v)
            if extend(cand & adj[v]):
                return True
            chosen.pop()
            if len(chosen) + cand.bit_count() < size:
                return False
        return False

    return tuple(chosen) if extend(candidates) else None


def closes_clique(adj: Sequence[int], u: int, v: int, size: int) -> bool:
    """Whether adding edge uv to ``adj`` creates a K_size through it."""
    return find_clique(adj, size - 2, adj[u] & adj[v]) is not None


def _distances_to(adj: Sequence[int], start: int, allowed: int) -> List[int]:
    far = len(adj) + 1
    dist = [far] * len(adj)
    dist[start] = 0
    frontier, seen, step = 1 << start, 1 << start, 0
    while frontier:
        step += 1
        fresh = 0
        for x in members(frontier):
            fresh |= adj[x] & allowed & ~seen
        for x in members(fresh):
            dist[x] = step
        seen |= fresh
        frontier = fresh
    return dist


def find_cycle(adj: Sequence[int], length: int) -> Optional[Tuple[int, ...]]:
    """
    Lexicographically first cycle of exactly ``length`` vertices.

    Cycles are written from their smallest vertex. Paths are cut when the
    remaining steps cannot reach the start again.
    """
    n = len(adj)
    for start in range(n):
        allowed = sum(1 << x for x in range(start, n))
        if (adj[start] & allowed).bit_count() < 2:
            continue
        dist = _distances_to(adj, start, allowed)
        path = [start]

        def walk(used: int) -> bool:
            here = path[-1]
            remaining = length - len(path) + 1
            if dist[here] > remaining:
                return False
            if len(path) == length:
                return bool(adj[here] >> start & 1)
            for x in members(adj[here] & allowed & ~used):
                path.append(x)
                if walk(used | 1 << x):
                    return True
                path.pop()
            return False

        if walk(1 << start):
            return tuple(path)
    return None


def closes_cycle(adj: Sequence[int], u: int, v: int, length: int) -> bool:
    """Whether adding edge uv to ``adj`` creates a C_length through it."""
    if length == 3:
        return bool(adj[u] & adj[v])

    def walk(here: int, used: int, steps: int) -> bool:
        if steps == length - 1:
            return here == v
        nxt = adj[here] & ~used
        if steps < length - 2:
            nxt &= ~(1 << v)
        for x in members(nxt):
            if walk(x, used | 1 << x, steps + 1):
                return True
        return False

    return walk(u, 1 << u, 0)


def _is_bipartite(adj: Sequence[int]) -> bool:
    graph = nx.Graph()
    graph.add_nodes_from(range(len(adj)))
    graph.add_edges_from((u, v) for u in range(len(adj)) for v in members(adj[u]) if u < v)
    return nx.is_bipartite(graph)


def has_mono_subgraph(colouring: SetColouring, target: TargetGraph) -> Optional[Witness]:
    """
    First colour carrying a copy of ``target``, with its vertex list.

    Colours are tried in increasing order; inside a colour the witness is the
    lexicographically first clique (sorted) or cycle (from its smallest vertex).
    """
    for colour in range(colouring.r):
        adj = colouring.adjacency(colour)
        if target.kind is TargetKind.CLIQUE:
            found = find_clique(adj, target.size, colouring.host.all_vertices)
        elif _is_bipartite(adj):
            continue
        else:
            found = find_cycle(adj, target.size)
        if found is not None:
            return colour, found
    return None

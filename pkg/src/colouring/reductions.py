"""
Colour and vertex manipulations that preserve or control tree cover numbers.

All functions return new colourings; inputs are never modified.
"""

from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from config import MAX_COLOURS
from colouring.colour_set import ColourSet, colour_set, full_set, members, size, smallest
from colouring.errors import ParameterError
from colouring.model import CoverCertificate, HostGraph, MonoComponent, SetColouring
from colouring.validation import validate


def _require_uniform(colouring: SetColouring, what: str) -> int:
    if colouring.k is None:
        raise ParameterError(f"{what} needs a uniform (r,k)-colouring")
    return colouring.k


def reduce_to_partition_colouring(colouring: SetColouring, drop_colours: Iterable[int]) -> SetColouring:
    """
    Deletes ``k-1`` colours everywhere and keeps the smallest survivor per edge.

    Survivors are re-indexed densely, so the result is an (r-k+1, 1)-colouring.
    Each of its monochromatic components lies inside a component of the input.
    """
    k = _require_uniform(colouring, "reduce_to_partition_colouring")
    drop = set(drop_colours)
    if len(drop) != k - 1 or any(not 0 <= c < colouring.r for c in drop):
        raise ParameterError(f"need exactly k-1={k - 1} colours below r={colouring.r} to drop, got {sorted(drop)}")
    kept = [c for c in range(colouring.r) if c not in drop]
    index = {c: i for i, c in enumerate(kept)}
    drop_mask = colour_set(drop)

    def recolour(u: int, v: int) -> ColourSet:
        survivors = colouring.colour_set(u, v) & ~drop_mask
        if not survivors:
            raise ParameterError(f"edge ({u}, {v}) loses every colour")
        return 1 << index[smallest(survivors)]

    return SetColouring.from_function(colouring.host, len(kept), 1, recolour)


def split_colours(colouring: SetColouring, k: int) -> SetColouring:
    """Replaces colour c by the block {c*k, ..., c*k+k-1}: an (r*k, k)-colouring."""
    if colouring.k != 1:
        raise ParameterError("split_colours needs an (r,1)-colouring")
    if k < 1 or colouring.r * k > MAX_COLOURS:
        raise ParameterError(f"r*k = {colouring.r * k} must lie in 1..{MAX_COLOURS}")
    block = full_set(k)

    def recolour(u: int, v: int) -> ColourSet:
        return block << (smallest(colouring.colour_set(u, v)) * k)

    return SetColouring.from_function(colouring.host, colouring.r * k, k, recolour)


def _check_colour_set(colouring: SetColouring, bits: ColourSet, what: str) -> None:
    if bits == 0 or bits >> colouring.r:
        raise ParameterError(f"{what} must be a non-empty subset of [r={colouring.r}]")
    if colouring.k is not None and size(bits) != colouring.k:
        raise ParameterError(f"{what} must have exactly k={colouring.k} colours")


def duplicate_vertex(
    colouring: SetColouring, v: int, cross_edge_colours: Optional[ColourSet] = None
) -> SetColouring:
    """
    Adds a twin of ``v`` carrying copies of all edges at ``v``.

    Complete hosts need the colour set of the edge between ``v`` and its twin.
    In bipartite hosts the twin joins the side of ``v``.
    """
    host = colouring.host
    if not 0 <= v < host.num_vertices:
        raise ParameterError(f"vertex {v} not in {host.describe()}")
    if host.is_bipartite:
        if host.in_side_a(v):
            new_host = HostGraph.bipartite(host.n + 1, host.m)

            def original(x: int) -> int:
                if x < host.n:
                    return x
                return v if x == host.n else x - 1
        else:
            new_host = HostGraph.bipartite(host.n, host.m + 1)

            def original(x: int) -> int:
                return x if x < host.num_vertices else v

        return SetColouring.from_function(
            new_host, colouring.r, colouring.k,
            lambda a, b: colouring.colour_set(original(a), original(b)),
            colouring.partial,
        )

    if cross_edge_colours is None:
        raise ParameterError("complete hosts need the colour set of the edge between the twins")
    _check_colour_set(colouring, cross_edge_colours, "cross edge colour set")
    twin = host.n

    def recolour(a: int, b: int) -> ColourSet:
        if b == twin:
            return cross_edge_colours if a == v else colouring.colour_set(a, v)
        return colouring.colour_set(a, b)

    return SetColouring.from_function(
        HostGraph.complete(host.n + 1), colouring.r, colouring.k, recolour, colouring.partial
    )


def delete_vertex(colouring: SetColouring, v: int) -> SetColouring:
    """Removes ``v``; later vertices shift down by one."""
    host = colouring.host
    if not 0 <= v < host.num_vertices:
        raise ParameterError(f"vertex {v} not in {host.describe()}")
    if host.is_bipartite:
        if host.in_side_a(v):
            new_host = HostGraph.bipartite(host.n - 1, host.m)
        else:
            new_host = HostGraph.bipartite(host.n, host.m - 1)
    else:
        new_host = HostGraph.complete(host.n - 1)

    def original(x: int) -> int:
        return x if x < v else x + 1

    return SetColouring.from_function(
        new_host, colouring.r, colouring.k,
        lambda a, b: colouring.colour_set(original(a), original(b)),
        colouring.partial,
    )


def bipartite_between(
    colouring: SetColouring,
    side_a: Sequence[int],
    side_b: Sequence[int],
    kept_colours: Sequence[int],
    k: Optional[int],
) -> Tuple[SetColouring, List[int], List[int]]:
    """
    The complete bipartite sub-colouring between two disjoint vertex lists.

    Only ``kept_colours`` survive, re-indexed densely. Returns the colouring,
    the original vertex of every new vertex and the original colour of every
    new colour.
    """
    vertex_map = list(side_a) + list(side_b)
    colour_map = list(kept_colours)
    index: Dict[int, int] = {c: i for i, c in enumerate(colour_map)}
    kept_mask = colour_set(colour_map)

    def recolour(a: int, b: int) -> ColourSet:
        bits = colouring.colour_set(vertex_map[a], vertex_map[b]) & kept_mask
        return colour_set(index[c] for c in members(bits))

    sub = SetColouring.from_function(
        HostGraph.bipartite(len(side_a), len(side_b)), len(colour_map), k, recolour, colouring.partial
    )
    return sub, vertex_map, colour_map


def star_cover(
    colouring: SetColouring,
    centre: int,
    colour_pool: Iterable[int],
    leaves: Optional[Iterable[int]] = None,
    check_pool_size: bool = True,
) -> CoverCertificate:
    """
    Covers the closed star at ``centre`` by monochromatic stars.

    Every leaf joins the star of the smallest pool colour on its edge.
    With a pool of r-k+1 colours each edge meets the pool, so at most
    r-k+1 stars are returned. ``leaves`` restricts the star to a subset of
    the centre's neighbours.
    """
    pool = sorted(set(colour_pool))
    if check_pool_size:
        k = _require_uniform(colouring, "star_cover")
        if len(pool) != colouring.r - k + 1:
            raise ParameterError(f"colour pool must have r-k+1={colouring.r - k + 1} colours, got {len(pool)}")
    if any(not 0 <= c < colouring.r for c in pool):
        raise ParameterError(f"pool colours must be below r={colouring.r}")
    pool_mask = colour_set(pool)
    if leaves is None:
        leaves = [u for u in colouring.host.neighbours(centre) if u != centre]
    stars: Dict[int, List[int]] = {}
    for leaf in leaves:
        hits = colouring.colour_set(centre, leaf) & pool_mask
        if not hits:
            raise ParameterError(f"edge ({centre}, {leaf}) carries no pool colour")
        stars.setdefault(smallest(hits), []).append(leaf)
    if not stars:
        return CoverCertificate((MonoComponent(pool[0] if pool else 0, 1 << centre),))
    trees = []
    for colour in sorted(stars):
        mask = 1 << centre
        for leaf in stars[colour]:
            mask |= 1 << leaf
        edges = tuple((min(centre, leaf), max(centre, leaf)) for leaf in stars[colour])
        trees.append(MonoComponent(colour, mask, edges))
    return CoverCertificate(tuple(trees))


def missing_colour_view(colouring: SetColouring) -> SetColouring:
    """Turns an (r,r-1)-colouring into the r-colouring by each edge's missing colour."""
    if colouring.k != colouring.r - 1 or validate(colouring):
        raise ParameterError("missing_colour_view needs a valid (r,r-1)-colouring")
    full = full_set(colouring.r)
    return SetColouring.from_function(
        colouring.host, colouring.r, 1, lambda u, v: full & ~colouring.colour_set(u, v)
    )

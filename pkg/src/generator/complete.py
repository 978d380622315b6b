from typing import List, Tuple

from config import MAX_COLOURS
from colouring.colour_set import colour_set, full_set
from colouring.errors import ParameterError
from colouring.model import HostGraph, SetColouring
from colouring.reductions import duplicate_vertex, split_colours
from generator.affine import affine_tree_cover_colouring


def two_missing_colouring(r: int) -> SetColouring:
    """(r, r-2)-colouring of K_r where edge ij misses colours i and j."""
    if r < 3:
        raise ParameterError(f"two_missing_colouring needs r >= 3, got {r}")
    full = full_set(r)
    return SetColouring.from_function(
        HostGraph.complete(r), r, r - 2, lambda u, v: full & ~colour_set((u, v))
    )


def path_lb_class_sizes(r: int) -> Tuple[int, ...]:
    """Smallest sizes with |V_1| = 1 and |V_i| = |V_1| + ... + |V_{i-1}| + 2."""
    sizes: List[int] = [1]
    for _ in range(1, r):
        sizes.append(sum(sizes) + 2)
    return tuple(sizes)


def path_partition_lb_colouring(r: int) -> SetColouring:
    """
    (r, r-1)-colouring that no single monochromatic path spans.

    Vertices fall into consecutive classes V_0, ..., V_{r-1}. An edge misses
    the colour of the earlier class among its endpoints' classes, so colour i
    reaches class i only from earlier classes.
    """
    if r < 2:
        raise ParameterError(f"path_partition_lb_colouring needs r >= 2, got {r}")
    sizes = path_lb_class_sizes(r)
    owner: List[int] = []
    for i, count in enumerate(sizes):
        owner.extend([i] * count)
    full = full_set(r)
    return SetColouring.from_function(
        HostGraph.complete(len(owner)), r, r - 1,
        lambda u, v: full & ~(1 << min(owner[u], owner[v])),
    )


def loboco_colouring(q: int, k: int, n: int) -> SetColouring:
    """
    (k(q+1), k)-colouring of K_n with tree cover number at least q.

    The affine colouring of K_{q^2} has every colour split into a block of
    k colours, then vertex 0 is duplicated until n vertices exist. Twins of
    vertex 0 are joined by the colours {0..k-1}.
    """
    if k < 1 or k * (q + 1) > MAX_COLOURS:
        raise ParameterError(f"need 1 <= k and k(q+1) <= {MAX_COLOURS}")
    if n < q * q:
        raise ParameterError(f"loboco colouring needs n >= q^2 = {q * q}, got {n}")
    colouring = split_colours(affine_tree_cover_colouring(q), k)
    cross = full_set(k)
    while colouring.n < n:
        colouring = duplicate_vertex(colouring, 0, cross)
    return colouring

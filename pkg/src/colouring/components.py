from collections import deque
from typing import List, Tuple

from colouring.colour_set import members
from colouring.errors import ParameterError
from colouring.model import Edge, MonoComponent, SetColouring


def spanning_tree(colouring: SetColouring, colour: int, vertices: int) -> Tuple[Edge, ...]:
    """BFS tree of the colour subgraph induced on ``vertices``, from its smallest vertex."""
    if not vertices:
        return ()
    adj = colouring.adjacency(colour)
    root = (vertices & -vertices).bit_length() - 1
    reached = 1 << root
    queue = deque([root])
    tree: List[Edge] = []
    while queue:
        u = queue.popleft()
        for w in members(adj[u] & vertices & ~reached):
            reached |= 1 << w
            tree.append((u, w) if u < w else (w, u))
            queue.append(w)
    if reached != vertices:
        raise ParameterError(f"vertex set is not connected in colour {colour}")
    return tuple(tree)


def component_at(colouring: SetColouring, colour: int, v: int) -> MonoComponent:
    """The maximal colour-``colour`` component containing ``v``, with its BFS tree."""
    mask = colouring.component_containing(colour, v)
    return MonoComponent(colour, mask, spanning_tree(colouring, colour, mask))


def mono_components(colouring: SetColouring, colour: int) -> List[MonoComponent]:
    """All components of one colour, isolated vertices included as singletons."""
    if not 0 <= colour < colouring.r:
        raise ParameterError(f"colour {colour} out of range for r={colouring.r}")
    return [
        MonoComponent(colour, mask, spanning_tree(colouring, colour, mask))
        for mask in colouring.component_masks(colour)
    ]


def sees_all_colours(colouring: SetColouring) -> bool:
    """True when every vertex is incident to an edge of every colour."""
    full = (1 << colouring.r) - 1
    return all(colouring.seen_colours(v) == full for v in range(colouring.n))


def is_colour_connected(colouring: SetColouring, colour: int) -> bool:
    return len(colouring.component_masks(colour)) == 1

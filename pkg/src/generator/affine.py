"""
Affine planes of prime order and the two colourings built on them.

Point ``(x, y)`` of the plane over Z_q is vertex ``x*q + y``. Parallel class
``a < q`` holds the lines ``y = a*x + b``; class ``q`` holds the vertical
lines ``x = c``.
"""

from dataclasses import dataclass
from typing import List, Tuple

from colouring.colour_set import colour_set, full_set
from colouring.errors import ParameterError
from colouring.model import HostGraph, SetColouring


def is_prime(q: int) -> bool:
    if q < 2:
        return False
    d = 2
    while d * d <= q:
        if q % d == 0:
            return False
        d += 1
    return True


def _require_prime(q: int) -> None:
    if not is_prime(q):
        raise ParameterError(f"prime required, got q={q}")


@dataclass(frozen=True)
class AffinePlane:
    order: int
    parallel_classes: Tuple[Tuple[Tuple[int, ...], ...], ...]

    @property
    def points(self) -> range:
        return range(self.order * self.order)

    def line_class(self, p1: int, p2: int) -> int:
        """Index of the parallel class containing the unique line through two points."""
        if p1 == p2:
            raise ParameterError("two distinct points required")
        q = self.order
        (x1, y1), (x2, y2) = divmod(p1, q), divmod(p2, q)
        if x1 == x2:
            return q
        return (y2 - y1) * pow(x2 - x1, -1, q) % q

    def lines(self) -> List[Tuple[int, ...]]:
        return [line for cls in self.parallel_classes for line in cls]


def affine_plane(q: int) -> AffinePlane:
    _require_prime(q)
    classes = []
    for a in range(q):
        classes.append(tuple(tuple(x * q + (a * x + b) % q for x in range(q)) for b in range(q)))
    classes.append(tuple(tuple(c * q + y for y in range(q)) for c in range(q)))
    return AffinePlane(q, tuple(classes))


def affine_tree_cover_colouring(q: int) -> SetColouring:
    """(q+1, 1)-colouring of K_{q^2}: an edge gets the class of the line through it."""
    plane = affine_plane(q)
    return SetColouring.from_function(
        HostGraph.complete(q * q), q + 1, 1, lambda u, v: 1 << plane.line_class(u, v)
    )


def turan_affine_colouring(q: int) -> SetColouring:
    """
    (q+1, q)-colouring of K_{q^2} with no monochromatic K_{q+1}.

    An edge misses exactly the colour of its line's parallel class, so a
    colour-i clique meets every class-i line at most once.
    """
    plane = affine_plane(q)
    full = full_set(q + 1)
    return SetColouring.from_function(
        HostGraph.complete(q * q), q + 1, q, lambda u, v: full & ~colour_set([plane.line_class(u, v)])
    )

"""
Seeded random colourings.

Randomness comes from numpy's PCG64 bit generator (``numpy.random.default_rng``).
A k-subset per edge is the set of the k smallest-keyed colours under i.i.d.
uniform keys, which is uniform over all k-subsets. Equal seeds give
bit-identical colourings on every platform numpy supports.
"""

from typing import Optional

import numpy as np

from config import MAX_COLOURS
from colouring.colour_set import colour_set
from colouring.errors import ParameterError
from colouring.model import HostGraph, SetColouring


def make_rng(seed: Optional[int]) -> np.random.Generator:
    return np.random.default_rng(np.random.PCG64(seed))


def random_colouring(host: HostGraph, r: int, k: int, seed: Optional[int] = 0) -> SetColouring:
    if not 1 <= k <= r <= MAX_COLOURS:
        raise ParameterError(f"need 1 <= k <= r <= {MAX_COLOURS}, got r={r}, k={k}")
    rng = make_rng(seed)
    return random_colouring_from(host, r, k, rng)


def random_colouring_from(host: HostGraph, r: int, k: int, rng: np.random.Generator) -> SetColouring:
    """Draws from an existing generator, for loops that sample many colourings."""
    keys = rng.random((host.num_edges, r))
    chosen = np.argsort(keys, axis=1, kind="stable")[:, :k]
    colours = tuple(colour_set(int(c) for c in row) for row in chosen)
    return SetColouring(host, r, colours, k)

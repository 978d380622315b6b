"""
Binary codes with minimum distance k and the colourings they induce.

Colour i joins two codewords that differ in coordinate i, so every colour
class is bipartite (split by the value of coordinate i) and has no odd cycle.
"""

import numpy as np

from config import MAX_GENERATED_VERTICES, MAX_COLOURS
from colouring.colour_set import colour_set
from colouring.errors import ParameterError
from colouring.model import HostGraph, SetColouring


def distance_code(r: int, k: int) -> np.ndarray:
    """
    2^{floor((r-1)/(k-1))} binary words of length r, pairwise at distance >= k.

    Starts from the all-zeros and all-ones words of length k. Each doubling
    step appends k-1 zeros to the current words and k-1 ones to their clones,
    and flips the old last coordinate of every clone. Unused trailing columns
    stay zero.
    """
    if k < 2:
        raise ParameterError(f"distance_code needs k >= 2, got {k}")
    if r < k or r > MAX_COLOURS:
        raise ParameterError(f"need k <= r <= {MAX_COLOURS}, got r={r}, k={k}")
    if 2 ** ((r - 1) // (k - 1)) > MAX_GENERATED_VERTICES:
        raise ParameterError(f"code for r={r}, k={k} would exceed {MAX_GENERATED_VERTICES} words")
    words = np.array([[0] * k, [1] * k], dtype=np.uint8)
    while words.shape[1] + k - 1 <= r:
        last = words.shape[1] - 1
        clones = words.copy()
        clones[:, last] ^= 1
        originals = np.hstack([words, np.zeros((len(words), k - 1), dtype=np.uint8)])
        clones = np.hstack([clones, np.ones((len(words), k - 1), dtype=np.uint8)])
        words = np.vstack([originals, clones])
    padding = np.zeros((len(words), r - words.shape[1]), dtype=np.uint8)
    return np.hstack([words, padding])


def distance_matrix(code: np.ndarray) -> np.ndarray:
    return (code[:, None, :] != code[None, :, :]).sum(axis=2)


def min_distance(code: np.ndarray) -> int:
    dist = distance_matrix(code)
    np.fill_diagonal(dist, code.shape[1] + 1)
    return int(dist.min()) if len(code) > 1 else code.shape[1]


def code_colouring(code: np.ndarray, k: int) -> SetColouring:
    """Edge vw gets the k smallest coordinates where v and w differ."""
    code = np.asarray(code, dtype=np.uint8)
    if code.ndim != 2 or len(code) < 2:
        raise ParameterError("code needs at least two words")
    if min_distance(code) < k:
        raise ParameterError(f"code has two words at distance < k={k}")
    r = code.shape[1]

    def colours(u: int, v: int) -> int:
        differing = np.flatnonzero(code[u] != code[v])[:k]
        return colour_set(int(i) for i in differing)

    return SetColouring.from_function(HostGraph.complete(len(code)), r, k, colours)

"""Colour sets are plain ints used as bit vectors over colours 0..r-1."""

from itertools import combinations
from typing import Iterable, List, Tuple

ColourSet = int


def colour_set(colours: Iterable[int]) -> ColourSet:
    bits = 0
    for c in colours:
        bits |= 1 << c
    return bits


def members(bits: ColourSet) -> Tuple[int, ...]:
    out = []
    while bits:
        low = bits & -bits
        out.append(low.bit_length() - 1)
        bits ^= low
    return tuple(out)


def size(bits: ColourSet) -> int:
    return bits.bit_count()


def smallest(bits: ColourSet) -> int:
    if not bits:
        raise ValueError("empty colour set has no smallest colour")
    return (bits & -bits).bit_length() - 1


def full_set(r: int) -> ColourSet:
    return (1 << r) - 1


def k_subsets(r: int, k: int) -> List[ColourSet]:
    """All k-subsets of [r] in lexicographic order of their sorted members."""
    return [colour_set(combo) for combo in combinations(range(r), k)]


def smallest_k(bits: ColourSet, k: int) -> ColourSet:
    return colour_set(members(bits)[:k])


def format_set(bits: ColourSet) -> str:
    return ",".join(str(c) for c in members(bits))


def set_key(bits: ColourSet) -> Tuple[int, ...]:
    """Sort key comparing colour sets lexicographically by members."""
    return members(bits)

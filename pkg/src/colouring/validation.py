from typing import List

from colouring.colour_set import format_set
from colouring.model import SetColouring


def validate(colouring: SetColouring) -> List[str]:
    """Lists every broken invariant of ``colouring``; an empty list means valid."""
    problems: List[str] = []
    r, k = colouring.r, colouring.k
    if k is not None and not 1 <= k <= r:
        problems.append(f"uniform size k={k} outside 1..r={r}")
    for u, v, bits in colouring.iter_edges():
        if bits == 0:
            if not colouring.partial:
                problems.append(f"edge ({u}, {v}): empty colour set")
            continue
        if bits >> r:
            problems.append(f"edge ({u}, {v}): colour {bits.bit_length() - 1} >= r={r}")
        count = bits.bit_count()
        if k is not None and count != k:
            problems.append(f"edge ({u}, {v}): cardinality {count} != k={k} ({{{format_set(bits)}}})")
    return problems


def is_uniform(colouring: SetColouring) -> bool:
    return colouring.k is not None and not validate(colouring)

"""
Closed-form facts about set-Ramsey numbers ram_{r,k}(H).

Everything here is arithmetic on small integers; exact rationals come from
:class:`fractions.Fraction` so no bound depends on float rounding.
"""

from fractions import Fraction
from math import comb, floor
from typing import Optional, Tuple

from config import CLASSICAL_RAMSEY, MAX_COLOURS
from colouring.errors import ParameterError
from colouring.model import SetColouring
from generator.codes import code_colouring, distance_code
from generator.cycles import doubling_cycle_colouring
from logger import get_logger
from ramsey.detect import has_mono_subgraph
from ramsey.target import TargetGraph, TargetKind

logger = get_logger(__name__)

Interval = Tuple[Optional[int], Optional[int]]


def _check_rk(r: int, k: int) -> None:
    if not 1 <= k <= r <= MAX_COLOURS:
        raise ParameterError(f"need 1 <= k <= r <= {MAX_COLOURS}, got r={r}, k={k}")


def trivial_ramsey_predicate(r: int, k: int, t: int) -> bool:
    """ram_{r,k}(K_t) = t exactly when r > (r-k) C(t,2)."""
    _check_rk(r, k)
    if t < 2:
        raise ParameterError(f"t must be >= 2, got {t}")
    return r > (r - k) * comb(t, 2)


def turan_epsilon(r: int, k: int, t: int) -> Fraction:
    """The epsilon of (t-2)/(t-1) = (1 - epsilon) k/r."""
    return 1 - Fraction(t - 2, t - 1) * Fraction(r, k)


def turan_upper_bound(r: int, k: int, t: int) -> Optional[int]:
    """floor(1/epsilon) + 1, or ``None`` when k/r <= (t-2)/(t-1)."""
    _check_rk(r, k)
    if t < 2:
        raise ParameterError(f"t must be >= 2, got {t}")
    eps = turan_epsilon(r, k, t)
    if eps <= 0:
        return None
    return floor(1 / eps) + 1


def classical_ramsey(colours: int, target: TargetGraph) -> Optional[int]:
    """R_s(H) from the compiled-in table; ``None`` when unknown."""
    if colours < 1:
        raise ParameterError(f"classical Ramsey numbers need at least one colour, got {colours}")
    if colours == 1:
        return target.num_vertices
    if target.kind is TargetKind.ODD_CYCLE and colours == 2 and target.size >= 5:
        return 2 * target.size - 1
    return CLASSICAL_RAMSEY.get((colours, *target.table_key))


def general_bounds(r: int, k: int, target: TargetGraph) -> Interval:
    """[R_{floor(r/k)}(H), R_{r-k+1}(H)]; unknown endpoints are ``None``."""
    _check_rk(r, k)
    return classical_ramsey(r // k, target), classical_ramsey(r - k + 1, target)


def cycle_lower_bound(r: int, k: int, cycle_length: int) -> Tuple[int, SetColouring]:
    """
    A C_l-free (r,k)-colouring of K_N with N = max(2^{floor((r-1)/(k-1))}, 2^{floor(r/k)-1}(l-1)).

    Returns (N, witness), so ram_{r,k}(C_l) > N. The code term needs k >= 2;
    for k = 1 only the doubling construction applies.
    """
    target = TargetGraph.odd_cycle(cycle_length)
    _check_rk(r, k)
    doubling = (cycle_length - 1) << (r // k - 1)
    code_size = 2 ** ((r - 1) // (k - 1)) if k >= 2 else 0
    if code_size >= doubling:
        witness = code_colouring(distance_code(r, k), k)
    else:
        witness = doubling_cycle_colouring(r, k, cycle_length)
    found = has_mono_subgraph(witness, target)
    if found is not None:
        raise AssertionError(f"{witness.describe()} has a monochromatic {target} in colour {found[0]}")
    logger.debug("cycle lower bound r=%d k=%d l=%d: code %d, doubling %d", r, k, cycle_length, code_size, doubling)
    return witness.n, witness

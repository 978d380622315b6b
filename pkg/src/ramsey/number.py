"""
ram_{r,k}(H) as an interval [lo, hi] that closes when the evidence meets.

lo is a proven lower bound (some (r,k)-colouring of K_{lo-1} avoids H) and
hi a proven upper bound (every (r,k)-colouring of K_hi contains H). Searches
then walk n = lo, lo+1, ... until one comes back Unavoidable, the interval
closes, the ceiling is reached or a budget runs out.
"""

from dataclasses import dataclass, field
from typing import List, Optional

from config import DEFAULT_RAMSEY_N_MAX, KNOWN_SET_RAMSEY
from colouring.errors import ParameterError
from generator.affine import is_prime, turan_affine_colouring
from logger import get_logger
from ramsey.bounds import (
    cycle_lower_bound,
    general_bounds,
    trivial_ramsey_predicate,
    turan_upper_bound,
)
from ramsey.detect import has_mono_subgraph
from ramsey.search import Outcome, SearchReport, ramsey_search
from ramsey.target import TargetGraph, TargetKind

logger = get_logger(__name__)


@dataclass
class RamseyValue:
    r: int
    k: int
    target: TargetGraph
    lo: int
    hi: Optional[int] = None
    evidence: List[str] = field(default_factory=list)
    searches: List[SearchReport] = field(default_factory=list)

    @property
    def exact(self) -> Optional[int]:
        return self.lo if self.hi == self.lo else None

    def raise_lo(self, value: int, why: str) -> None:
        if value > self.lo:
            self.lo = value
            self.evidence.append(f"lo {value}: {why}")

    def lower_hi(self, value: Optional[int], why: str) -> None:
        if value is not None and (self.hi is None or value < self.hi):
            self.hi = value
            self.evidence.append(f"hi {value}: {why}")

    def as_dict(self) -> dict:
        return {
            "r": self.r,
            "k": self.k,
            "target": str(self.target),
            "lo": self.lo,
            "hi": self.hi,
            "exact": self.exact,
            "evidence": list(self.evidence),
            "searches": [
                {"n": s.n, "outcome": s.outcome.value, "nodes": s.nodes} for s in self.searches
            ],
        }


def _construction_bounds(value: RamseyValue) -> None:
    r, k, target = value.r, value.k, value.target
    # Colourings from the code and doubling constructions have bipartite
    # colour classes (or blocks of size l-1), so they avoid every clique K_t, t >= 3.
    if target.size >= 3:
        length = target.size if target.kind is TargetKind.ODD_CYCLE else 3
        try:
            bound, witness = cycle_lower_bound(r, k, length)
        except ParameterError as exc:
            logger.debug("no cycle construction for r=%d k=%d: %s", r, k, exc)
        else:
            if has_mono_subgraph(witness, target) is None:
                value.raise_lo(bound + 1, f"C_{length}-free {witness.describe()}")
    if target.kind is TargetKind.CLIQUE and r == k + 1 and is_prime(k) and target.size >= k + 1:
        witness = turan_affine_colouring(k)
        if has_mono_subgraph(witness, target) is None:
            value.raise_lo(witness.n + 1, f"affine plane {witness.describe()}")


def ramsey_number(
    r: int,
    k: int,
    target: TargetGraph,
    n_max: Optional[int] = None,
    budget: Optional[int] = None,
    use_classical: bool = False,
    use_known: bool = False,
    symmetry: bool = True,
    threads: int = 1,
    time_limit: Optional[float] = None,
) -> RamseyValue:
    """
    Bounds ram_{r,k}(target), exact when the bounds meet.

    ``use_classical`` folds in the interval from classical Ramsey numbers and
    ``use_known`` the compiled-in table of small values; by default both
    are left out and the value is recomputed.
    Without ``n_max`` the searches stop at the classical upper bound
    R_{r-k+1}(target), capped by ``DEFAULT_RAMSEY_N_MAX``.
    """
    if not 1 <= k <= r:
        raise ParameterError(f"need 1 <= k <= r, got r={r}, k={k}")
    value = RamseyValue(r, k, target, lo=target.num_vertices, evidence=[f"lo {target.num_vertices}: |V(H)|"])

    if target.kind is TargetKind.CLIQUE:
        if trivial_ramsey_predicate(r, k, target.size):
            value.lower_hi(target.size, "r > (r-k) C(t,2)")
        value.lower_hi(turan_upper_bound(r, k, target.size), "Turan density bound")
    _construction_bounds(value)
    if use_classical:
        lo, hi = general_bounds(r, k, target)
        if lo is not None:
            value.raise_lo(lo, f"R_{r // k}({target})")
        value.lower_hi(hi, f"R_{r - k + 1}({target})")
    if use_known and target.kind is TargetKind.CLIQUE:
        value.lower_hi(KNOWN_SET_RAMSEY.get((r, k, target.size)), "known value")
        if (r, k, target.size) in KNOWN_SET_RAMSEY:
            value.raise_lo(KNOWN_SET_RAMSEY[(r, k, target.size)], "known value")

    if value.hi is not None and value.hi < value.lo:
        raise AssertionError(f"inconsistent bounds for ram_{r},{k}({target}): {value.lo} > {value.hi}")

    if n_max is None:
        classical = general_bounds(r, k, target)[1]
        n_max = DEFAULT_RAMSEY_N_MAX if classical is None else min(classical, DEFAULT_RAMSEY_N_MAX)
        logger.debug("searches for ram_%d,%d(%s) stop at n=%d", r, k, target, n_max)
    ceiling = min(n_max, value.hi or n_max)
    n = value.lo
    while value.exact is None and n <= ceiling:
        report = ramsey_search(r, k, target, n, budget, symmetry, threads, time_limit)
        value.searches.append(report)
        if report.outcome is Outcome.AVOIDABLE:
            value.raise_lo(n + 1, f"search found an avoiding colouring of K_{n}")
        elif report.outcome is Outcome.UNAVOIDABLE:
            value.lower_hi(n, f"search exhausted K_{n}")
        else:
            logger.warning("budget exceeded at n=%d, ram_%d,%d(%s) left as an interval", n, r, k, target)
            break
        n += 1

    logger.info("ram_%d,%d(%s) in [%s, %s]", r, k, target, value.lo, value.hi)
    return value

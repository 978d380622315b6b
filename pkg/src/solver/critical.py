"""
Critical colourings: tree cover number t that drops to t-1 after deleting any vertex.

For t in {2, 3} the critical function f maps each vertex v to a smallest
colour set S such that t-1 monochromatic components of K_n in colours of S
cover every vertex except v. Such functions are injective, which bounds n.
"""

from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Dict, List, Optional, Tuple

from colouring.components import sees_all_colours
from colouring.errors import ParameterError
from colouring.model import SetColouring
from colouring.reductions import delete_vertex
from logger import get_logger
from solver.exact import exact_tree_cover

logger = get_logger(__name__)


def lbn_inequality(n: int, r: int, k: int, t: int) -> bool:
    """
    k C(n,2) <= r (t-1 + C(n-2(t-1), 2)).

    Holds for every (r,k)-colouring of K_n with tree cover number t in which
    every vertex sees every colour. For n < 2(t-1) the binomial is taken as 0.
    """
    spare = n - 2 * (t - 1)
    if spare < 0:
        logger.warning("lbn inequality evaluated with n=%d < 2(t-1)=%d", n, 2 * (t - 1))
        spare = 0
    return k * comb(n, 2) <= r * (t - 1 + comb(spare, 2))


def vertex_bound(r: int, t: int, sees_all: bool = False) -> int:
    """Largest n a t-critical colouring can have: r, r + C(r,2), or C(r,2) if every vertex sees every colour."""
    if sees_all:
        return comb(r, 2)
    return r if t == 2 else r + comb(r, 2)


@dataclass
class CriticalReport:
    t: int
    value: int
    is_critical: bool
    critical_function: Dict[int, Optional[Tuple[int, ...]]] = field(default_factory=dict)
    sees_all_colours: bool = False
    injective: bool = False
    vertex_bound: int = 0
    within_bound: bool = True
    lbn_holds: Optional[bool] = None

    def as_dict(self) -> dict:
        return {
            "t": self.t,
            "value": self.value,
            "is_critical": self.is_critical,
            "critical_function": {str(v): list(s) if s is not None else None for v, s in self.critical_function.items()},
            "sees_all_colours": self.sees_all_colours,
            "injective": self.injective,
            "vertex_bound": self.vertex_bound,
            "within_bound": self.within_bound,
            "lbn_holds": self.lbn_holds,
        }


def _critical_set(colouring: SetColouring, v: int, t: int) -> Optional[Tuple[int, ...]]:
    target = colouring.host.all_vertices & ~(1 << v)
    for size in range(1, t):
        for colours in combinations(range(colouring.r), size):
            pieces: List[int] = []
            for c in colours:
                pieces.extend(m for m in colouring.component_masks(c) if not m >> v & 1)
            for count in range(1, t):
                for chosen in combinations(pieces, count):
                    covered = 0
                    for mask in chosen:
                        covered |= mask
                    if covered == target:
                        return colours
    return None


def critical_report(colouring: SetColouring, t: int, budget: Optional[int] = None) -> CriticalReport:
    if t not in (2, 3):
        raise ParameterError(f"critical reports cover t in {{2, 3}}, got {t}")
    if colouring.host.is_bipartite:
        raise ParameterError("critical reports need a complete host")
    n, r = colouring.n, colouring.r
    value, _ = exact_tree_cover(colouring, budget)
    is_critical = value == t and n > 1
    if is_critical:
        for v in range(n):
            reduced, _ = exact_tree_cover(delete_vertex(colouring, v), budget)
            if reduced != t - 1:
                logger.debug("vertex %d: K_n - v still needs %d trees", v, reduced)
                is_critical = False
                break

    function = {v: _critical_set(colouring, v, t) for v in range(n)} if is_critical else {}
    images = [s for s in function.values() if s is not None]
    sees_all = sees_all_colours(colouring)
    bound = vertex_bound(r, t, sees_all)
    report = CriticalReport(
        t=t,
        value=value,
        is_critical=is_critical,
        critical_function=function,
        sees_all_colours=sees_all,
        injective=is_critical and len(images) == n and len(set(images)) == n,
        vertex_bound=bound,
        within_bound=not is_critical or n <= bound,
    )
    if sees_all and colouring.k is not None:
        report.lbn_holds = lbn_inequality(n, r, colouring.k, value)
    logger.info(
        "%s: t=%d critical=%s injective=%s n=%d bound=%d",
        colouring.describe(), value, is_critical, report.injective, n, bound,
    )
    return report


def critical_vertices_summary(report: CriticalReport) -> List[str]:
    return [
        f"{v}: {{{','.join(map(str, s))}}}" if s is not None else f"{v}: none"
        for v, s in sorted(report.critical_function.items())
    ]

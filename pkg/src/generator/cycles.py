from config import MAX_COLOURS, MAX_GENERATED_VERTICES
from colouring.colour_set import full_set
from colouring.errors import ParameterError
from colouring.model import HostGraph, SetColouring
from logger import get_logger

logger = get_logger(__name__)


def doubling_cycle_colouring(r: int, k: int, cycle_length: int) -> SetColouring:
    """
    (r,k)-colouring of K_{2^{floor(r/k)-1}(l-1)} without a monochromatic odd cycle C_l.

    The base K_{l-1} has every edge coloured {0..k-1}. Each doubling step
    places two copies side by side and gives the edges between them the next
    k unused colours; those colours form a bipartite graph.
    """
    if cycle_length < 3 or cycle_length % 2 == 0:
        raise ParameterError(f"cycle length must be odd and >= 3, got {cycle_length}")
    if k < 1 or r // k < 1 or r > MAX_COLOURS:
        raise ParameterError(f"need 1 <= k <= r <= {MAX_COLOURS}, got r={r}, k={k}")
    steps = r // k - 1
    n = (cycle_length - 1) << steps
    if n > MAX_GENERATED_VERTICES:
        raise ParameterError(f"K_{n} exceeds {MAX_GENERATED_VERTICES} vertices")
    block_size = cycle_length - 1

    def colours(u: int, v: int) -> int:
        # Highest doubling level at which u and v fall into different copies.
        level = ((u // block_size) ^ (v // block_size)).bit_length()
        return full_set(k) << (level * k)

    logger.debug("doubling %d times from K_%d to K_%d", steps, block_size, n)
    return SetColouring.from_function(HostGraph.complete(n), r, k, colours)

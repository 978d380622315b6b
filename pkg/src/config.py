# SetColour Lab Configuration

import os

from dotenv import load_dotenv

load_dotenv()

TOOL_NAME = "setcolour-lab"
TOOL_VERSION = "0.1.0"

# Colour model limits
MAX_COLOURS = 64

# Search budgets (node counts)
DEFAULT_COVER_BUDGET = int(os.getenv("SETCOLOUR_BUDGET", "2000000"))
DEFAULT_PARTITION_BUDGET = 5_000_000
DEFAULT_RAMSEY_BUDGET = 50_000_000
DEFAULT_HYPERGRAPH_BUDGET = 2_000_000
STRETCH_RAMSEY_BUDGET = 1_000_000_000

# Runtime
DEFAULT_SEED = int(os.getenv("SETCOLOUR_SEED", "0"))
DEFAULT_THREADS = int(os.getenv("RAMSEY_THREADS", "1"))
DEFAULT_LOG_LEVEL = os.getenv("SETCOLOUR_LOG_LEVEL", "WARNING")
# Largest host a set-Ramsey number search climbs to when no upper bound is known
DEFAULT_RAMSEY_N_MAX = int(os.getenv("RAMSEY_N_MAX", "10"))

# Exit codes
EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3

# Desk-scale limits for exhaustive solvers
MAX_PARTITION_VERTICES = 16
MAX_EXACT_COVER_VERTICES = 128
MAX_GENERATED_VERTICES = 4096

# Classical r-colour Ramsey numbers R_s(H).
# Keys: (s, kind, size) with kind "K" (clique K_size) or "C" (cycle C_size).
# R_1 of any graph is its number of vertices and is handled in code.
CLASSICAL_RAMSEY = {
    (2, "K", 3): 6,    # Greenwood and Gleason 1955
    (3, "K", 3): 17,   # Greenwood and Gleason 1955
    (2, "K", 4): 18,   # Greenwood and Gleason 1955
    (2, "C", 3): 6,    # C_3 = K_3
    (3, "C", 3): 17,
}

# Small set-Ramsey values ram_{r,k}(K_t), keyed by (r, k, t).
KNOWN_SET_RAMSEY = {
    (2, 2, 3): 3,    # every edge carries both colours
    (2, 1, 3): 6,    # classical R(3,3)
    (3, 3, 3): 3,
    (3, 2, 3): 5,    # exhaustive search, turan bound is tight
    (3, 1, 3): 17,   # classical R_3(K_3)
    (4, 4, 3): 3,
    (4, 3, 3): 3,    # closed form r > (r-k) C(t,2)
    (4, 2, 3): 9,    # code construction + neighbourhood argument
    (5, 4, 3): 3,
    (3, 2, 4): 10,   # Chung and Liu 1978
}

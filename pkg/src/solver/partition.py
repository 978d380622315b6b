"""
Exact partition of the vertices into monochromatic paths or cycles.

A single vertex counts as a path and as a (degenerate) cycle; a single edge
counts as a cycle in each of its colours. For every colour a bitmask dynamic
programme records which vertex sets carry a Hamiltonian path (or cycle) in
that colour. The minimum partition is then a memoised recursion that always
places the lowest uncovered vertex.
"""

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Dict, List, Optional, Tuple

from pydantic import BaseModel, Field, ValidationError

from config import DEFAULT_PARTITION_BUDGET, MAX_PARTITION_VERTICES
from colouring.colour_set import members
from colouring.errors import BudgetExceeded, ColouringParseError, ParameterError
from colouring.model import SetColouring
from colouring.validation import validate
from logger import get_logger

logger = get_logger(__name__)


class PieceKind(str, Enum):
    PATH = "path"
    CYCLE = "cycle"


@dataclass(frozen=True)
class PartitionPiece:
    colour: int
    vertices: Tuple[int, ...]
    kind: PieceKind = PieceKind.PATH


@dataclass(frozen=True)
class PartitionCertificate:
    pieces: Tuple[PartitionPiece, ...]

    @property
    def size(self) -> int:
        return len(self.pieces)


def _lowest(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


class _ColourTable:
    """Hamiltonian path / cycle end sets of every vertex subset, for one colour."""

    def __init__(self, adj: Tuple[int, ...], n: int, cycles: bool):
        self.adj = adj
        self.cycles = cycles
        size = 1 << n
        ends = [0] * size
        for v in range(n):
            ends[1 << v] = 1 << v
        for mask in range(1, size):
            current = ends[mask]
            if not current:
                continue
            # Cycle tables grow paths from the lowest vertex only.
            allowed = ~mask if not cycles else ~mask & ~((1 << (_lowest(mask) + 1)) - 1)
            for v in members(current):
                for x in members(adj[v] & allowed):
                    ends[mask | 1 << x] |= 1 << x
        self.ends = ends

    def works(self, mask: int) -> bool:
        if not self.cycles:
            return bool(self.ends[mask])
        count = mask.bit_count()
        if count <= 2:
            return bool(self.ends[mask]) if count == 2 else True
        start = _lowest(mask)
        return any(self.adj[v] >> start & 1 for v in members(self.ends[mask]))

    def sequence(self, mask: int) -> Tuple[int, ...]:
        """Walks the table backwards to recover an explicit path or cycle order."""
        if self.cycles and mask.bit_count() >= 3:
            start = _lowest(mask)
            end = next(v for v in members(self.ends[mask]) if self.adj[v] >> start & 1)
        else:
            end = _lowest(self.ends[mask])
        order = [end]
        remaining = mask & ~(1 << end)
        while remaining:
            nxt = next(u for u in members(self.ends[remaining] & self.adj[order[-1]]))
            order.append(nxt)
            remaining &= ~(1 << nxt)
        order.reverse()
        return tuple(order)


def _exact_partition(
    colouring: SetColouring, kind: PieceKind, budget: Optional[int]
) -> Tuple[int, PartitionCertificate]:
    problems = validate(colouring)
    if problems:
        raise ParameterError(f"invalid colouring: {problems[0]}")
    n = colouring.n
    if n > MAX_PARTITION_VERTICES:
        raise ParameterError(f"partition solver supports at most {MAX_PARTITION_VERTICES} vertices, got {n}")
    limit = DEFAULT_PARTITION_BUDGET if budget is None else budget
    cycles = kind is PieceKind.CYCLE
    tables = [_ColourTable(colouring.adjacency(c), n, cycles) for c in range(colouring.r)]
    piece_colour: Dict[int, int] = {}

    def colour_of(mask: int) -> int:
        if mask not in piece_colour:
            piece_colour[mask] = next((c for c, t in enumerate(tables) if t.works(mask)), -1)
        return piece_colour[mask]

    nodes = 0

    @lru_cache(maxsize=None)
    def best(mask: int) -> Tuple[int, int]:
        """(pieces needed for ``mask``, first piece of an optimal choice)."""
        nonlocal nodes
        if not mask:
            return 0, 0
        if colour_of(mask) >= 0:
            return 1, mask
        low = 1 << _lowest(mask)
        others = mask & ~low
        found = (mask.bit_count() + 1, 0)
        sub = others
        while True:
            nodes += 1
            if nodes > limit:
                raise BudgetExceeded(f"exact {kind.value} partition", nodes, limit)
            piece = sub | low
            if piece != mask and colour_of(piece) >= 0:
                rest, _ = best(mask & ~piece)
                if 1 + rest < found[0] or (1 + rest == found[0] and piece > found[1]):
                    found = (1 + rest, piece)
                    if found[0] == 2:
                        break
            if not sub:
                break
            sub = (sub - 1) & others
        return found

    value, _ = best(colouring.host.all_vertices)
    pieces: List[PartitionPiece] = []
    mask = colouring.host.all_vertices
    while mask:
        _, piece = best(mask)
        colour = colour_of(piece)
        pieces.append(PartitionPiece(colour, tables[colour].sequence(piece), kind))
        mask &= ~piece
    best.cache_clear()
    logger.debug("%s partition of %s: %d pieces, %d nodes", kind.value, colouring.describe(), value, nodes)
    return value, PartitionCertificate(tuple(pieces))


def exact_path_partition(colouring: SetColouring, budget: Optional[int] = None) -> Tuple[int, PartitionCertificate]:
    return _exact_partition(colouring, PieceKind.PATH, budget)


def exact_cycle_partition(colouring: SetColouring, budget: Optional[int] = None) -> Tuple[int, PartitionCertificate]:
    return _exact_partition(colouring, PieceKind.CYCLE, budget)


def verify_partition(colouring: SetColouring, certificate: PartitionCertificate) -> List[str]:
    """Every reason ``certificate`` is not a monochromatic path/cycle partition."""
    problems: List[str] = []
    seen = 0
    for index, piece in enumerate(certificate.pieces):
        where = f"piece {index} ({piece.kind.value}, colour {piece.colour})"
        if not 0 <= piece.colour < colouring.r:
            problems.append(f"{where}: colour outside 0..{colouring.r - 1}")
            continue
        if not piece.vertices:
            problems.append(f"{where}: empty")
            continue
        for v in piece.vertices:
            if not 0 <= v < colouring.n:
                problems.append(f"{where}: vertex {v} outside the host")
            elif seen >> v & 1:
                problems.append(f"{where}: vertex {v} used twice")
            seen |= 1 << v if 0 <= v < colouring.n else 0
        steps = list(zip(piece.vertices, piece.vertices[1:]))
        if piece.kind is PieceKind.CYCLE and len(piece.vertices) >= 3:
            steps.append((piece.vertices[-1], piece.vertices[0]))
        for u, v in steps:
            if not colouring.host.has_edge(u, v):
                problems.append(f"{where}: ({u}, {v}) is not a host edge")
            elif not colouring.colour_set(u, v) >> piece.colour & 1:
                problems.append(f"{where}: edge ({u}, {v}) lacks colour {piece.colour}")
    problems.extend(f"vertex {v} uncovered" for v in members(colouring.host.all_vertices & ~seen))
    return problems


class PieceDocument(BaseModel):
    colour: int
    vertices: List[int]
    kind: PieceKind = PieceKind.PATH


class PartitionDocument(BaseModel):
    kind: str = "partition"
    size: int
    pieces: List[PieceDocument] = Field(default_factory=list)


def partition_to_document(certificate: PartitionCertificate) -> PartitionDocument:
    return PartitionDocument(
        size=certificate.size,
        pieces=[PieceDocument(colour=p.colour, vertices=list(p.vertices), kind=p.kind) for p in certificate.pieces],
    )


def partition_from_document(doc: dict) -> PartitionCertificate:
    try:
        parsed = PartitionDocument.model_validate(doc)
    except ValidationError as exc:
        raise ColouringParseError(exc.errors()[0]["msg"], None, "certificate") from exc
    return PartitionCertificate(
        tuple(PartitionPiece(p.colour, tuple(p.vertices), p.kind) for p in parsed.pieces)
    )

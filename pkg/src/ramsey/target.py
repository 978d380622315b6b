import re
from dataclasses import dataclass
from enum import Enum

from colouring.errors import ParameterError


class TargetKind(str, Enum):
    CLIQUE = "K"
    ODD_CYCLE = "C"


_TARGET_PATTERN = re.compile(r"^\s*([KkCc])_?(\d+)\s*$")


@dataclass(frozen=True)
class TargetGraph:
    """A clique K_t (t >= 2) or an odd cycle C_l (l >= 3)."""

    kind: TargetKind
    size: int

    def __post_init__(self):
        if self.kind is TargetKind.CLIQUE and self.size < 2:
            raise ParameterError(f"clique target needs t >= 2, got {self.size}")
        if self.kind is TargetKind.ODD_CYCLE and (self.size < 3 or self.size % 2 == 0):
            raise ParameterError(f"cycle target must be odd with length >= 3, got {self.size}")

    @classmethod
    def clique(cls, t: int) -> "TargetGraph":
        return cls(TargetKind.CLIQUE, t)

    @classmethod
    def odd_cycle(cls, length: int) -> "TargetGraph":
        return cls(TargetKind.ODD_CYCLE, length)

    @classmethod
    def parse(cls, text: str) -> "TargetGraph":
        """Reads ``K3``, ``K_4`` or ``C5``."""
        match = _TARGET_PATTERN.match(text)
        if not match:
            raise ParameterError(f"target must look like K3 or C5, got {text!r}")
        return cls(TargetKind(match.group(1).upper()), int(match.group(2)))

    @property
    def num_vertices(self) -> int:
        return self.size

    @property
    def num_edges(self) -> int:
        if self.kind is TargetKind.CLIQUE:
            return self.size * (self.size - 1) // 2
        return self.size

    @property
    def is_triangle(self) -> bool:
        return self.size == 3

    @property
    def table_key(self):
        """Key shape used by the Ramsey tables in :mod:`config`."""
        return self.kind.value, self.size

    def __str__(self) -> str:
        return f"{self.kind.value}{self.size}"

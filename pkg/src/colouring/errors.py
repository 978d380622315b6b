"""Exceptions shared by every module of the package."""

from typing import Optional


class SetColouringError(ValueError):
    """Base class for all library errors."""


class ParameterError(SetColouringError):
    """A parameter is out of range or a precondition does not hold."""


class ColouringParseError(SetColouringError):
    """Malformed colouring / hypergraph / certificate input."""

    def __init__(self, message: str, line: Optional[int] = None, field: Optional[str] = None):
        self.line = line
        self.field = field
        where = []
        if line is not None:
            where.append(f"line {line}")
        if field is not None:
            where.append(f"field '{field}'")
        prefix = f"{', '.join(where)}: " if where else ""
        super().__init__(f"{prefix}{message}")


class BudgetExceeded(SetColouringError):
    """A search ran out of its node budget before reaching a verdict."""

    def __init__(self, what: str, nodes: int, budget: int):
        self.what = what
        self.nodes = nodes
        self.budget = budget
        super().__init__(f"{what}: budget of {budget} nodes exceeded after {nodes} nodes")


class CoverConstructionError(AssertionError):
    """A constructive cover reached a branch its argument rules out."""

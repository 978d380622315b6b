"""Machine-readable run reports printed on stdout by every sub-command."""

import sys
from typing import Any, Dict, Optional

from pydantic import BaseModel, Field

from config import TOOL_NAME, TOOL_VERSION
from logger import console


class RunReport(BaseModel):
    tool: str = TOOL_NAME
    tool_version: str = TOOL_VERSION
    command: str
    parameters: Dict[str, Any] = Field(default_factory=dict)
    outcome: str = Field(..., description="ok, negative, usage-error, BudgetExceeded or a search outcome")
    payload: Dict[str, Any] = Field(default_factory=dict)
    seed: Optional[int] = None
    wall_time: float = 0.0
    exit_code: int = 0


def emit(report: RunReport, fmt: str = "json") -> None:
    """JSON on stdout, or a short key/value rendering for people."""
    if fmt == "json":
        sys.stdout.write(report.model_dump_json(indent=2) + "\n")
        return
    sys.stdout.write(f"{report.command}: {report.outcome} (exit {report.exit_code})\n")
    for key, value in report.payload.items():
        if isinstance(value, (dict, list)):
            continue
        sys.stdout.write(f"  {key}: {value}\n")
    console.print(f"[dim]{report.tool} {report.tool_version}, {report.wall_time:.3f}s[/dim]")

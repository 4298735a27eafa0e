from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any, Optional

from ..version import __version__

FORMATS = ("text", "json")


@dataclass
class Report:
    """The outcome of one command: 'payload' feeds the structured format and
    'lines' the text format. Both carry the command echo.
    """

    command: str
    title: str
    payload: dict[str, Any] = field(default_factory=dict)
    lines: list[str] = field(default_factory=list)
    states: Optional[int] = None
    wall_time: Optional[float] = None
    version: str = __version__

    def to_document(self) -> dict[str, Any]:
        document: dict[str, Any] = {"tool": "ring-explorer", "version": self.version, "command": self.command}
        document["title"] = self.title
        if self.states is not None:
            document["states"] = self.states
        if self.wall_time is not None:
            document["wall_time"] = round(self.wall_time, 6)
        document.update(self.payload)
        return document


def emit_report(report: Report, fmt: str = "text") -> str:
    if fmt == "json":
        return json.dumps(report.to_document(), indent=2, ensure_ascii=False) + "\n"
    if fmt != "text":
        raise ValueError(f"unknown report format {fmt!r}, expected one of {', '.join(FORMATS)}")
    lines = [f"# ring-explorer {report.version}: {report.command}", f"# {report.title}"]
    lines.extend(report.lines)
    if report.states is not None:
        lines.append(f"states: {report.states}")
    if report.wall_time is not None:
        lines.append(f"wall time: {report.wall_time:.3f} s")
    return "\n".join(lines) + "\n"

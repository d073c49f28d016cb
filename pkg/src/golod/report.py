"""Deterministic JSON/text certificate reports and exit-code mapping."""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from . import __version__
from .criteria import INCONCLUSIVE, PROVEN_GOLOD, REFUTED

REPORT_VERSION = 1

EXIT_PROVEN = 0
EXIT_REFUTED = 1
EXIT_INCONCLUSIVE = 2
EXIT_USAGE = 3
EXIT_GATE = 4
EXIT_BUDGET = 5


def exit_code_for_status(status: str) -> int:
    return {PROVEN_GOLOD: EXIT_PROVEN, REFUTED: EXIT_REFUTED, INCONCLUSIVE: EXIT_INCONCLUSIVE}[status]


@dataclass
class Report:
    input_echo: dict
    config: dict
    results: list
    budget: dict
    timings: dict | None = None
    tool: dict = field(default_factory=lambda: {"name": "golod", "version": __version__,
                                                "report_version": REPORT_VERSION})

    def exit_code(self) -> int:
        return max(exit_code_for_status(r["verdict"]["status"]) for r in self.results)


def _jsonable(x):
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, (int, float, str, bool)) or x is None:
        return x
    return str(x)


def emit_report(report: Report, fmt: str = "json") -> str:
    if fmt == "json":
        payload = {
            "tool": report.tool,
            "input": _jsonable(report.input_echo),
            "config": _jsonable(report.config),
            "results": _jsonable(report.results),
            "budget": _jsonable(report.budget),
        }
        if report.timings is not None:
            payload["timings"] = _jsonable(report.timings)
        return json.dumps(payload, sort_keys=True, indent=2) + "\n"
    if fmt == "text":
        lines = [f"golod {report.tool['version']} report"]
        ring = report.input_echo.get("ring", "")
        lines.append(f"ring: {ring}")
        for r in report.results:
            v = r["verdict"]
            head = f"ideal {r['ideal']}: {v['status']}"
            if v.get("certificate"):
                head += f" [{v['certificate']}]"
            lines.append(head)
            for key in ("witness", "first_nonzero", "b", "c", "m", "rho", "route"):
                if key in v.get("details", {}):
                    lines.append(f"    {key}: {v['details'][key]}")
            trace = v.get("details", {}).get("trace")
            if trace:
                lines.append("    criterion trace:")
                width = max(len(t["criterion"]) for t in trace)
                for t in trace:
                    lines.append(f"      {t['criterion']:<{width}}  {t['status']}")
        if report.budget:
            lines.append(f"budget: {report.budget}")
        if report.timings:
            lines.append(f"timings: {report.timings}")
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown report format {fmt!r}")

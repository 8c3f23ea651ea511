"""Report objects emitted by the command-line harness, and their JSON schema."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any

__all__ = [
    "PASS",
    "FAIL",
    "ERROR",
    "CONJECTURE_PASS",
    "CONJECTURE_FAIL",
    "STATUSES",
    "Check",
    "Report",
    "REPORT_SCHEMA",
    "combine_status",
]

PASS = "PASS"
FAIL = "FAIL"
ERROR = "ERROR"
CONJECTURE_PASS = "CONJECTURE-PASS"
CONJECTURE_FAIL = "CONJECTURE-FAIL"
STATUSES = (PASS, FAIL, ERROR, CONJECTURE_PASS, CONJECTURE_FAIL)

# worst first
_SEVERITY = [ERROR, FAIL, CONJECTURE_FAIL, CONJECTURE_PASS, PASS]


def combine_status(statuses) -> str:
    statuses = list(statuses)
    if not statuses:
        return PASS
    return min(statuses, key=_SEVERITY.index)


@dataclass
class Check:
    name: str
    status: str
    detail: str = ""
    data: dict[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        if self.status not in STATUSES:
            raise ValueError(f"unknown status {self.status!r}")

    @classmethod
    def of(cls, name: str, ok: bool, detail: str = "", **data) -> Check:
        return cls(name, PASS if ok else FAIL, detail, data)

    def to_dict(self) -> dict[str, Any]:
        return {"name": self.name, "status": self.status, "detail": self.detail, "data": self.data}


@dataclass
class Report:
    command: str
    parameters: dict[str, Any]
    checks: list[Check] = field(default_factory=list)
    payload: dict[str, Any] = field(default_factory=dict)
    error: str | None = None

    @property
    def status(self) -> str:
        if self.error is not None:
            return ERROR
        return combine_status(c.status for c in self.checks)

    def add(self, check: Check) -> Check:
        self.checks.append(check)
        return check

    def exit_code(self) -> int:
        status = self.status
        if status == ERROR:
            return 2
        if status == FAIL:
            return 1
        return 0

    def to_dict(self) -> dict[str, Any]:
        out = {
            "command": self.command,
            "parameters": self.parameters,
            "status": self.status,
            "checks": [c.to_dict() for c in self.checks],
            "payload": self.payload,
        }
        if self.error is not None:
            out["error"] = self.error
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True, default=_jsonable)

    def to_text(self) -> str:
        """Tab-delimited, one line per check, then a summary line."""
        lines = []
        for c in self.checks:
            lines.append("\t".join([c.status, c.name, c.detail]).rstrip())
        if self.error is not None:
            lines.append(f"{ERROR}\t{self.command}\t{self.error}")
        lines.append(f"# {self.command}: {self.status} ({len(self.checks)} checks)")
        return "\n".join(lines)


def _jsonable(obj):
    from fractions import Fraction

    if isinstance(obj, Fraction):
        return str(obj)
    if hasattr(obj, "tolist"):
        return obj.tolist()
    raise TypeError(f"{type(obj).__name__} is not JSON serializable")


REPORT_SCHEMA: dict[str, Any] = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "dendchar report",
    "type": "object",
    "required": ["command", "parameters", "status", "checks", "payload"],
    "additionalProperties": False,
    "properties": {
        "command": {"type": "string"},
        "parameters": {"type": "object"},
        "status": {"enum": list(STATUSES)},
        "error": {"type": "string"},
        "payload": {"type": "object"},
        "checks": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["name", "status", "detail", "data"],
                "additionalProperties": False,
                "properties": {
                    "name": {"type": "string"},
                    "status": {"enum": list(STATUSES)},
                    "detail": {"type": "string"},
                    "data": {"type": "object"},
                },
            },
        },
    },
}

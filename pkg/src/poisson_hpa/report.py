"""Verification reports: named checks with pass/fail/skip status and rendered residuals."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

PASS, FAIL, SKIP = "pass", "fail", "skip"


@dataclass
class Check:
    id: str
    status: str
    residuals: List[str] = field(default_factory=list)
    detail: str = ""

    @property
    def passed(self) -> bool:
        return self.status != FAIL

    def as_dict(self) -> Dict[str, Any]:
        d: Dict[str, Any] = {"id": self.id, "status": self.status}
        if self.residuals:
            d["residuals"] = list(self.residuals)
        if self.detail:
            d["detail"] = self.detail
        return d


@dataclass
class Report:
    command: str
    checks: List[Check] = field(default_factory=list)
    data: Dict[str, Any] = field(default_factory=dict)
    notes: List[str] = field(default_factory=list)
    input_digest: Optional[str] = None

    def add(self, id: str, ok: Optional[bool], residuals=(), detail: str = "") -> Check:
        """Append a check; ``ok=None`` records a skip."""
        status = SKIP if ok is None else (PASS if ok else FAIL)
        c = Check(id, status, [str(r) for r in residuals], detail)
        self.checks.append(c)
        return c

    def extend(self, other: "Report", prefix: str = "") -> None:
        for c in other.checks:
            self.checks.append(Check(prefix + c.id, c.status, list(c.residuals), c.detail))
        self.notes.extend(other.notes)

    def check(self, id: str) -> Check:
        for c in self.checks:
            if c.id == id:
                return c
        raise KeyError(id)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def summary(self) -> str:
        return PASS if self.passed else FAIL

    def failures(self) -> List[Check]:
        return [c for c in self.checks if c.status == FAIL]

    def as_dict(self) -> Dict[str, Any]:
        d: Dict[str, Any] = {"command": self.command}
        if self.input_digest is not None:
            d["input_digest"] = self.input_digest
        d["summary"] = self.summary
        d["checks"] = [c.as_dict() for c in self.checks]
        if self.data:
            d["data"] = self.data
        if self.notes:
            d["notes"] = list(self.notes)
        return d

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), indent=2, sort_keys=False, ensure_ascii=False) + "\n"

    def to_text(self) -> str:
        lines = [f"{self.command}: {self.summary}"]
        if self.input_digest is not None:
            lines.append(f"input sha256 {self.input_digest}")
        for c in self.checks:
            lines.append(f"  [{c.status}] {c.id}" + (f"  {c.detail}" if c.detail else ""))
            for r in c.residuals:
                lines.append(f"      {r}")
        for key, value in self.data.items():
            lines.append(f"  {key}: {_text(value)}")
        for n in self.notes:
            lines.append(f"  note: {n}")
        return "\n".join(lines) + "\n"


def _text(value) -> str:
    if isinstance(value, (dict, list)):
        return json.dumps(value, ensure_ascii=False, sort_keys=False)
    return str(value)

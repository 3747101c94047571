"""Structured results of named checks."""

from __future__ import annotations

import json
from dataclasses import dataclass, field

PASS = "pass"
FAIL = "fail"
SKIPPED = "skipped"


@dataclass
class Report:
    check: str
    status: str = PASS
    residuals: list = field(default_factory=list)  # (location, witness-string)
    params: dict = field(default_factory=dict)
    elapsed_ms: float = 0.0
    notes: list = field(default_factory=list)
    control: bool = False  # corruption twin: expected to fail, never gates

    def add_residual(self, location, witness) -> None:
        self.residuals.append((str(location), str(witness)))
        self.status = FAIL

    def note(self, line: str) -> None:
        self.notes.append(line)

    def skip(self, reason: str) -> None:
        self.status = SKIPPED
        self.notes.append(f"skipped: {reason}")

    @property
    def passed(self) -> bool:
        return self.status == PASS

    @property
    def ok(self) -> bool:
        """Whether this report meets expectations (twins must fail)."""
        if self.control:
            return self.status == FAIL and bool(self.residuals)
        return self.status == PASS

    def merge(self, other: "Report", prefix: str = "") -> None:
        for loc, wit in other.residuals:
            self.add_residual(f"{prefix}{loc}", wit)
        self.notes.extend(f"{prefix}{n}" for n in other.notes)

    def to_dict(self) -> dict:
        return {
            "check": self.check,
            "status": self.status,
            "residuals": [{"location": loc, "witness": wit} for loc, wit in self.residuals],
            "params": self.params,
            "elapsed_ms": round(self.elapsed_ms, 3),
            "control": self.control,
            "notes": list(self.notes),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    def to_text(self, max_residuals: int = 10) -> str:
        params = " ".join(f"{k}={v}" for k, v in sorted(self.params.items()))
        lines = [f"{self.check}: {self.status.upper()} ({params}) {self.elapsed_ms:.1f} ms"]
        for loc, wit in self.residuals[:max_residuals]:
            lines.append(f"  residual at {loc}: {wit}")
        if len(self.residuals) > max_residuals:
            lines.append(f"  ... {len(self.residuals) - max_residuals} more residuals")
        lines.extend(f"  {n}" for n in self.notes)
        return "\n".join(lines)

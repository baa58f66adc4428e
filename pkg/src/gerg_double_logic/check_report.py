# check_report.py
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional


@dataclass
class Diagnostic:
    index: Optional[int]
    kind: str
    message: str

    def __str__(self) -> str:
        where = "" if self.index is None else f"#{self.index + 1}: "
        return f"{where}[{self.kind}] {self.message}"


@dataclass
class CheckReport:
    """Verdict of a proof or derivation check, with per-line/per-step diagnostics."""
    name: str
    accepted: bool
    diagnostics: List[Diagnostic] = field(default_factory=list)
    details: Dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "verdict": "accept" if self.accepted else "reject",
            "diagnostics": [
                {"index": None if d.index is None else d.index + 1, "kind": d.kind, "message": d.message}
                for d in self.diagnostics
            ],
            **self.details,
        }


class DiagnosticCollector:
    """Accumulates diagnostics and turns them into a CheckReport."""

    def __init__(self, name: str):
        self.name = name
        self.diagnostics: List[Diagnostic] = []

    def add(self, index: Optional[int], kind: str, message: str) -> None:
        self.diagnostics.append(Diagnostic(index, kind, message))

    def has_errors(self) -> bool:
        return bool(self.diagnostics)

    def report(self, **details) -> CheckReport:
        return CheckReport(self.name, not self.diagnostics, list(self.diagnostics), details)

    def summary(self) -> str:
        return f"Check of '{self.name}' failed:\n" + "\n".join(f"  - {d}" for d in self.diagnostics)

"""Report records produced by the command layer."""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional


@dataclass
class CommandReport:
    """Outcome of one command.

    ``details`` holds plain values only so the report serializes as JSON;
    ``document`` is a printable text artifact (a theory or vocabulary).
    """

    command: str
    ok: bool = True
    details: Dict[str, Any] = field(default_factory=dict)
    document: Optional[str] = None
    error: Optional[Dict[str, Any]] = None

    def to_dict(self) -> Dict[str, Any]:
        report: Dict[str, Any] = {"command": self.command, "ok": self.ok, "details": self.details}
        if self.document is not None:
            report["document"] = self.document
        if self.error is not None:
            report["error"] = self.error
        return report


@dataclass
class LawSummary:
    """Counts for one law suite run."""

    suite: str
    size: int
    laws: List[Dict[str, Any]] = field(default_factory=list)

    @property
    def checked(self) -> int:
        return sum(law["checked"] for law in self.laws)

    @property
    def failed(self) -> int:
        return sum(len(law["failures"]) for law in self.laws)

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def to_dict(self) -> Dict[str, Any]:
        return {
            "suite": self.suite,
            "size": self.size,
            "checked": self.checked,
            "failed": self.failed,
            "laws": self.laws,
        }

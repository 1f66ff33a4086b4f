"""Structured check reports shared by all verification modules."""

from __future__ import annotations

from dataclasses import dataclass, field

PASS = "PASS"
FAIL = "FAIL"
REPORT = "REPORT"


@dataclass
class CheckReport:
    name: str
    status: str
    residues: list[str] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "status": self.status,
            "residues": list(self.residues),
            "notes": list(self.notes),
        }

    def render_text(self) -> str:
        lines = [f"[{self.status}] {self.name}"]
        for r in self.residues:
            lines.append(f"    residue: {r}")
        for n in self.notes:
            lines.append(f"    note: {n}")
        return "\n".join(lines)


def from_residues(name, labeled_residues, notes=(), report_only=False) -> CheckReport:
    """PASS iff every labeled residue is zero; nonzero ones are rendered."""
    bad = [f"{label}: {value}" for label, value in labeled_residues if not value.is_zero()]
    if report_only:
        status = REPORT
    else:
        status = PASS if not bad else FAIL
    return CheckReport(name, status, residues=bad, notes=list(notes))

"""Structured pass/fail/flagged reports shared by all verification routines."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction


def json_safe(value):
    """Render exact values (Fractions, polynomials, maps) as JSON-friendly data."""
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, (int, str, bool)) or value is None:
        return value
    if isinstance(value, dict):
        return {str(k): json_safe(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [json_safe(v) for v in value]
    return str(value)


@dataclass
class Report:
    """Outcome of one identity check or verification sweep.

    status is "pass", "flagged" (known, documented discrepancies only) or
    "fail"; mismatches carry enough data to reproduce the first failure.
    """

    check: str
    status: str = "pass"
    context: dict = field(default_factory=dict)
    mismatches: list = field(default_factory=list)
    flags: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.status != "fail"

    def fail(self, **details) -> "Report":
        self.status = "fail"
        self.mismatches.append(details)
        return self

    def flag(self, message: str) -> "Report":
        self.flags.append(message)
        if self.status == "pass":
            self.status = "flagged"
        return self

    def note(self, message: str) -> "Report":
        self.notes.append(message)
        return self

    def to_dict(self) -> dict:
        return {
            "check": self.check,
            "status": self.status,
            "context": json_safe(self.context),
            "mismatches": json_safe(self.mismatches),
            "flags": list(self.flags),
            "notes": list(self.notes),
        }


def merge_reports(check: str, reports: list[Report], context: dict | None = None) -> Report:
    """Roll a list of reports into one; any failure fails the merge."""
    merged = Report(check, context=dict(context or {}))
    for r in reports:
        if r.status == "fail":
            merged.status = "fail"
            merged.mismatches.extend(r.mismatches or [{"check": r.check}])
        merged.flags.extend(r.flags)
        merged.notes.extend(r.notes)
    if merged.status != "fail" and merged.flags:
        merged.status = "flagged"
    return merged

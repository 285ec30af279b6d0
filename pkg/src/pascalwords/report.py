"""Structured verification reports with versioned JSON serialization."""

import json
from dataclasses import dataclass, field

SCHEMA_VERSION = 1

PASS = "pass"
FAIL = "fail"
SKIP = "skip"


@dataclass(frozen=True)
class CheckCase:
    """One comparison: what ran, with which parameters, and both sides."""

    operation: str
    parameters: dict
    expected: object
    actual: object
    status: str


@dataclass
class CheckReport:
    suite: str
    cases: list[CheckCase] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    def add(self, operation: str, parameters: dict, expected, actual) -> bool:
        """Record a comparison; status is pass iff expected == actual."""
        status = PASS if expected == actual else FAIL
        self.cases.append(CheckCase(operation, parameters, expected, actual, status))
        return status == PASS

    def add_skip(self, operation: str, parameters: dict, reason: str) -> None:
        self.cases.append(CheckCase(operation, parameters, reason, None, SKIP))
        self.notes.append(f"skipped {operation}: {reason}")

    def note(self, text: str) -> None:
        self.notes.append(text)

    def extend(self, other: "CheckReport") -> None:
        self.cases.extend(other.cases)
        self.notes.extend(other.notes)

    @property
    def summary(self) -> dict[str, int]:
        counts = {PASS: 0, FAIL: 0, SKIP: 0}
        for case in self.cases:
            counts[case.status] += 1
        return counts

    @property
    def failures(self) -> list[CheckCase]:
        return [c for c in self.cases if c.status == FAIL]

    @property
    def exit_code(self) -> int:
        return 1 if self.summary[FAIL] else 0

    def to_dict(self) -> dict:
        return {
            "schema_version": SCHEMA_VERSION,
            "suite": self.suite,
            "cases": [
                {
                    "operation": c.operation,
                    "parameters": c.parameters,
                    "expected": c.expected,
                    "actual": c.actual,
                    "status": c.status,
                }
                for c in self.cases
            ],
            "summary": self.summary,
            "notes": self.notes,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2) + "\n"

    def to_lines(self) -> str:
        """Human-readable rendering: one line per case plus a summary line."""
        lines = []
        for c in self.cases:
            params = json.dumps(c.parameters, sort_keys=True)
            line = f"{c.status.upper():4} {c.operation} {params}"
            if c.status == FAIL:
                line += f" expected={c.expected} actual={c.actual}"
            lines.append(line)
        s = self.summary
        lines.append(
            f"suite {self.suite}: {s[PASS]} passed, {s[FAIL]} failed, {s[SKIP]} skipped"
        )
        for note in self.notes:
            lines.append(f"note: {note}")
        return "\n".join(lines) + "\n"

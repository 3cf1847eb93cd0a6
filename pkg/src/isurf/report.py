"""Check reports: exact expected/computed pairs, no tolerances."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any


def _show(value: Any) -> Any:
    """JSON-friendly rendering of exact values."""
    if isinstance(value, Fraction):
        return str(value) if value.denominator != 1 else int(value)
    if isinstance(value, (set, frozenset)):
        return sorted(_show(v) for v in value)
    if isinstance(value, (tuple, list)):
        return [_show(v) for v in value]
    return value


@dataclass(frozen=True)
class CheckEntry:
    check_id: str
    source: str
    expected: Any
    computed: Any

    @property
    def passed(self) -> bool:
        return self.expected == self.computed

    def to_json(self) -> dict:
        return {
            "id": self.check_id,
            "source": self.source,
            "expected": _show(self.expected),
            "computed": _show(self.computed),
            "pass": self.passed,
        }


@dataclass
class Report:
    entries: list[CheckEntry] = field(default_factory=list)

    def add(self, check_id: str, source: str, expected: Any, computed: Any) -> None:
        self.entries.append(CheckEntry(check_id, source, expected, computed))

    @property
    def ok(self) -> bool:
        return all(e.passed for e in self.entries)

    @property
    def counts(self) -> tuple[int, int]:
        passed = sum(1 for e in self.entries if e.passed)
        return passed, len(self.entries) - passed

    def sorted(self) -> "Report":
        return Report(sorted(self.entries, key=lambda e: e.check_id))

    def to_json(self) -> dict:
        passed, failed = self.counts
        return {
            "entries": [e.to_json() for e in self.entries],
            "summary": {"pass": passed, "fail": failed, "ok": self.ok},
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True, indent=2) + "\n"

    def to_text(self) -> str:
        lines = []
        width = max((len(e.check_id) for e in self.entries), default=0)
        for e in self.entries:
            status = "PASS" if e.passed else "FAIL"
            lines.append(
                f"{status}  {e.check_id:<{width}}  expected={_show(e.expected)!r}"
                f" computed={_show(e.computed)!r}  [{e.source}]"
            )
        passed, failed = self.counts
        lines.append(f"{passed} passed, {failed} failed")
        return "\n".join(lines) + "\n"

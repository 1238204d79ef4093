"""Check reports: small pass/fail records that aggregate into certificates."""

from __future__ import annotations

from dataclasses import dataclass, field

__all__ = ["Check", "Report"]


@dataclass
class Check:
    check_id: str
    passed: bool
    detail: str = ""

    def as_json(self):
        d = {"id": self.check_id, "passed": self.passed}
        if self.detail:
            d["detail"] = self.detail
        return d


@dataclass
class Report:
    title: str
    checks: list[Check] = field(default_factory=list)

    def add(self, check_id: str, passed: bool, detail: str = "") -> bool:
        self.checks.append(Check(check_id, bool(passed), detail))
        return bool(passed)

    def expect(self, check_id: str, passed: bool, detail: str = "") -> bool:
        """Like add(), but raises on failure (for build-time verification)."""
        self.add(check_id, passed, detail)
        if not passed:
            raise AssertionError(f"{self.title}: {check_id} failed"
                                 + (f" ({detail})" if detail else ""))
        return True

    def merge(self, other: Report) -> None:
        self.checks.extend(other.checks)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def as_json(self):
        return {"title": self.title, "passed": self.passed,
                "checks": [c.as_json() for c in self.checks]}

    def as_text(self) -> str:
        lines = [f"[{'PASS' if self.passed else 'FAIL'}] {self.title}"]
        for c in self.checks:
            mark = "ok  " if c.passed else "FAIL"
            lines.append(f"  {mark} {c.check_id}" + (f": {c.detail}" if c.detail else ""))
        return "\n".join(lines)

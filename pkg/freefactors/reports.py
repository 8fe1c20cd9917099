"""Check reports shared by the complex verifiers and the CLI."""

from __future__ import annotations

from collections.abc import Iterable
from enum import Enum

from pydantic import BaseModel, Field


class CheckStatus(str, Enum):
    PASS = "pass"
    FAIL = "fail"
    INCONCLUSIVE = "inconclusive"


class Check(BaseModel):
    """One named check with its outcome and the words that witness it."""

    name: str
    status: CheckStatus
    detail: str = ""
    witnesses: list[str] = Field(default_factory=list)


class Report(BaseModel):
    """Ordered list of checks; text and JSON renderings derive from it."""

    title: str
    checks: list[Check] = Field(default_factory=list)

    def add(
        self,
        name: str,
        passed: bool | None,
        detail: str = "",
        witnesses: Iterable[object] = (),
    ) -> Check:
        """Record a check; ``None`` records an inconclusive outcome."""
        if passed is None:
            status = CheckStatus.INCONCLUSIVE
        else:
            status = CheckStatus.PASS if passed else CheckStatus.FAIL
        check = Check(
            name=name, status=status, detail=detail, witnesses=[str(w) for w in witnesses]
        )
        self.checks.append(check)
        return check

    def extend(self, other: Report, prefix: str = "") -> None:
        for check in other.checks:
            name = f"{prefix}{check.name}" if prefix else check.name
            self.checks.append(check.model_copy(update={"name": name}))

    @property
    def failed(self) -> list[Check]:
        return [c for c in self.checks if c.status is CheckStatus.FAIL]

    @property
    def inconclusive(self) -> list[Check]:
        return [c for c in self.checks if c.status is CheckStatus.INCONCLUSIVE]

    @property
    def passed(self) -> bool:
        return not self.failed

    def status_of(self, name: str) -> CheckStatus:
        for check in self.checks:
            if check.name == name:
                return check.status
        raise KeyError(name)

    def to_text(self) -> str:
        lines = [self.title]
        for check in self.checks:
            line = f"  [{check.status.value}] {check.name}"
            if check.detail:
                line += f": {check.detail}"
            lines.append(line)
            lines.extend(f"      {w}" for w in check.witnesses)
        verdict = "PASS" if self.passed else "FAIL"
        if self.passed and self.inconclusive:
            verdict = "INCONCLUSIVE"
        lines.append(f"result: {verdict}")
        return "\n".join(lines)

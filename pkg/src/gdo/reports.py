"""Named check results shared by the verification suite and the CLI."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Tuple


@dataclass(frozen=True)
class CheckResult:
    """One named measurement compared against a threshold."""

    name: str
    measured: float
    threshold: float
    passed: bool


@dataclass(frozen=True)
class VerificationReport:
    """A bundle of check results; overall holds iff every check passed."""

    checks: Tuple[CheckResult, ...]
    overall: bool
    runtime_ms: int

    def by_name(self, name: str) -> CheckResult:
        for check in self.checks:
            if check.name == name:
                return check
        raise KeyError(name)

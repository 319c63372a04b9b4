"""
Verification report models
"""
import time
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field

from ..utils.exceptions import VerificationError

class CheckResult(BaseModel):
    """Outcome of one check; a failure carries its smallest counterexample."""
    name: str
    scope: Dict[str, Any] = Field(default_factory=dict)
    passed: bool
    checked: int = 0
    failures: int = 0
    counterexample: Optional[str] = None
    details: Dict[str, Any] = Field(default_factory=dict)
    seconds: float = 0.0

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        scope = " ".join(f"{k}={v}" for k, v in sorted(self.scope.items()))
        text = f"{status} {self.name} [{scope}] checked={self.checked}"
        if not self.passed:
            text += f" failures={self.failures} counterexample={self.counterexample}"
        return text

class VerificationReport(BaseModel):
    seed: Optional[int] = None
    checks: List[CheckResult] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    def merge(self, other: "VerificationReport") -> "VerificationReport":
        merged = {check.name: check for check in self.checks}
        merged.update({check.name: check for check in other.checks})
        return VerificationReport(
            seed=self.seed if self.seed is not None else other.seed,
            checks=sorted(merged.values(), key=lambda check: check.name),
        )

    def get(self, name: str) -> CheckResult:
        for check in self.checks:
            if check.name == name:
                return check
        raise KeyError(name)

    def summary(self) -> str:
        """Deterministic text summary; timings are left out."""
        lines = [check.line() for check in self.checks]
        lines.append(f"{'PASS' if self.passed else 'FAIL'}: "
                     f"{sum(c.passed for c in self.checks)}/{len(self.checks)} checks passed")
        return "\n".join(lines)

    def to_json(self) -> str:
        return self.model_dump_json(indent=2)

    def enforce(self) -> None:
        failed = [check.name for check in self.checks if not check.passed]
        if failed:
            raise VerificationError(f"failed checks: {', '.join(failed)}")

class CheckRecorder:
    """Collects outcomes of one check and shrinks failures to the smallest witness.

    Witnesses are ordered by caret count, then by their text.
    """

    def __init__(self, name: str, **scope):
        self.name = name
        self.scope = scope
        self.checked = 0
        self.failures = []
        self.details = {}
        self._started = time.perf_counter()

    def record(self, ok: bool, witness: str = "", size: int = 0) -> bool:
        self.checked += 1
        if not ok:
            self.failures.append((size, witness))
        return ok

    def result(self) -> CheckResult:
        counterexample = None
        if self.failures:
            counterexample = min(self.failures)[1]
        return CheckResult(
            name=self.name,
            scope=self.scope,
            passed=not self.failures,
            checked=self.checked,
            failures=len(self.failures),
            counterexample=counterexample,
            details=self.details,
            seconds=round(time.perf_counter() - self._started, 3),
        )

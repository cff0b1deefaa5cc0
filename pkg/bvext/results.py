"""Check results and suite reports.

This module provides the record types every suite fills in:
- CheckResult: Verdict of one identity family with its first witness
- SuiteReport: Ordered checks, dimension tables and findings of one suite
"""

import numbers
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional


def to_jsonable(value: Any) -> Any:
    """Convert tuples and exact scalars in a witness to JSON-native values."""
    if isinstance(value, (list, tuple)):
        return [to_jsonable(v) for v in value]
    if isinstance(value, dict):
        return {str(k): to_jsonable(v) for k, v in value.items()}
    if value is None or isinstance(value, (bool, int, float, str)):
        return value
    if isinstance(value, numbers.Integral):
        return int(value)
    return str(value)


@dataclass
class CheckResult:
    """Verdict of a single identity check."""
    name: str
    passed: bool
    witness: Optional[Any] = None
    detail: str = ""
    cases: int = 0
    informational: bool = False  # findings never change the suite verdict

    def to_dict(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "passed": self.passed,
            "witness": self.witness,
            "detail": self.detail,
            "cases": self.cases,
            "informational": self.informational,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "CheckResult":
        return cls(
            name=data["name"],
            passed=data["passed"],
            witness=data.get("witness"),
            detail=data.get("detail", ""),
            cases=data.get("cases", 0),
            informational=data.get("informational", False),
        )


@dataclass
class SuiteReport:
    """Report shared between a suite, the event registry and the CLI."""
    suite: str
    instance: str = ""
    checks: List[CheckResult] = field(default_factory=list)
    dimensions: Dict[str, List[int]] = field(default_factory=dict)
    findings: List[str] = field(default_factory=list)

    def add_check(self, check: CheckResult) -> CheckResult:
        """Append a check and return it."""
        self.checks.append(check)
        return check

    def record(self, name: str, passed: bool, witness: Any = None, detail: str = "",
               cases: int = 0, informational: bool = False) -> CheckResult:
        """Build and append a check in one call."""
        return self.add_check(
            CheckResult(name, bool(passed), to_jsonable(witness), detail, cases, informational)
        )

    def add_finding(self, message: str):
        """Record a finding that does not affect the verdict."""
        self.findings.append(message)

    def extend(self, other: "SuiteReport", prefix: str = ""):
        """Merge the checks and dimension tables of another report."""
        for check in other.checks:
            merged = CheckResult.from_dict(check.to_dict())
            if prefix:
                merged.name = f"{prefix}{check.name}"
            self.checks.append(merged)
        for key, dims in other.dimensions.items():
            self.dimensions[f"{prefix}{key}"] = list(dims)
        self.findings.extend(other.findings)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks if not c.informational)

    def get(self, name: str) -> Optional[CheckResult]:
        """The check with the given name, or None."""
        return next((c for c in self.checks if c.name == name), None)

    def first_failure(self) -> Optional[CheckResult]:
        for check in self.checks:
            if not check.passed and not check.informational:
                return check
        return None

    def to_dict(self) -> Dict[str, Any]:
        return {
            "suite": self.suite,
            "instance": self.instance,
            "passed": self.passed,
            "checks": [c.to_dict() for c in self.checks],
            "dimensions": {k: list(v) for k, v in self.dimensions.items()},
            "findings": list(self.findings),
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "SuiteReport":
        return cls(
            suite=data["suite"],
            instance=data.get("instance", ""),
            checks=[CheckResult.from_dict(c) for c in data.get("checks", [])],
            dimensions={k: list(v) for k, v in data.get("dimensions", {}).items()},
            findings=list(data.get("findings", [])),
        )

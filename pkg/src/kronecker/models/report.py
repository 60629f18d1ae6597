"""
Verification reports produced by the identity suites.
"""

from typing import Any

import orjson
from pydantic import BaseModel, ConfigDict, Field


class Violation(BaseModel):
    """One falsified case: the input tuple and both sides as decimal strings."""

    model_config = ConfigDict(frozen=True)

    input: dict[str, Any]
    expected: str
    actual: str


class VerificationReport(BaseModel):
    """
    Outcome of a suite run. A suite passes iff it has no violations.

    Example:
        {"suite": "alternating", "cases": 1715, "violations": []}
    """

    model_config = ConfigDict(frozen=True)

    suite: str
    cases: int = Field(default=0, ge=0)
    violations: tuple[Violation, ...] = ()

    @property
    def passed(self) -> bool:
        return not self.violations

    @classmethod
    def merge(cls, suite: str, reports: list["VerificationReport"]) -> "VerificationReport":
        """Concatenate reports in the given order."""
        return cls(
            suite=suite,
            cases=sum(r.cases for r in reports),
            violations=tuple(v for r in reports for v in r.violations),
        )

    def to_document(self) -> dict[str, Any]:
        return {
            "suite": self.suite,
            "cases": self.cases,
            "passed": self.passed,
            "violations": [v.model_dump() for v in self.violations],
        }

    def to_json(self) -> bytes:
        return orjson.dumps(self.to_document())

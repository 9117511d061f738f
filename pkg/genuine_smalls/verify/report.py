"""
Results of a verification run.
"""

from dataclasses import dataclass, field
from typing import Any, Dict, List

__all__ = [
    "PASS",
    "FAIL",
    "RECORDED",
    "SKIPPED",
    "STATUSES",
    "EXIT_OK",
    "EXIT_FAILED",
    "ClaimResult",
    "VerificationReport",
]

PASS = "pass"
FAIL = "fail"
RECORDED = "recorded-discrepancy"
# deep claims in a run without long checks
SKIPPED = "skipped"

STATUSES = (PASS, FAIL, RECORDED, SKIPPED)

EXIT_OK = 0
EXIT_FAILED = 1


@dataclass
class ClaimResult:
    """
    The outcome of one claim.

    :param claim_id: The claim.
    :type claim_id: str
    :param topic: What it is about.
    :type topic: str
    :param status: One of `STATUSES`.
    :type status: str
    :param detail: A short explanation.
    :type detail: str
    :param seconds: Time spent in the check.
    :type seconds: float
    """

    claim_id: str
    topic: str
    status: str
    detail: str = ""
    seconds: float = field(default=0.0, compare=False)

    def __post_init__(self) -> None:
        if self.status not in STATUSES:
            raise ValueError(f"unknown claim status {self.status!r}")

    def as_dict(self) -> Dict[str, Any]:
        # timings stay out of the document so that output is reproducible
        return {
            "claim": self.claim_id,
            "topic": self.topic,
            "status": self.status,
            "detail": self.detail,
        }


@dataclass
class VerificationReport:
    scope: str
    deep: bool
    results: List[ClaimResult] = field(default_factory=list)

    def count(self, status: str) -> int:
        return sum(1 for r in self.results if r.status == status)

    @property
    def failed(self) -> bool:
        return self.count(FAIL) > 0

    @property
    def exit_code(self) -> int:
        """0 when nothing failed, 1 otherwise. Recorded discrepancies do not fail a run."""
        return EXIT_FAILED if self.failed else EXIT_OK

    def result(self, claim_id: str) -> ClaimResult:
        for r in self.results:
            if r.claim_id == claim_id:
                return r
        raise KeyError(claim_id)

    def as_dict(self) -> Dict[str, Any]:
        return {
            "scope": self.scope,
            "deep": self.deep,
            "summary": {status: self.count(status) for status in STATUSES},
            "results": [r.as_dict() for r in self.results],
        }

from dataclasses import dataclass, field
from typing import Any, Dict, List

STATUSES = ("pass", "fail", "skipped", "noted")


@dataclass
class ClaimResult:
    id: str
    anchor: str
    status: str
    details: Dict[str, Any] = field(default_factory=dict)
    counterexample: Dict[str, Any] = field(default_factory=dict)

    def to_json(self) -> Dict[str, Any]:
        payload = {
            "id": self.id,
            "anchor": self.anchor,
            "status": self.status,
            "details": self.details,
        }
        if self.status == "fail":
            payload["counterexample"] = self.counterexample
        return payload


class VerificationReport:
    """
    Aggregates per-claim results of one verification run.

    Results may arrive in any order; ``compute`` orders them by claim id.
    """

    def __init__(self, max_rank: int, alphas: List[str]):
        self.max_rank = max_rank
        self.alphas = alphas
        self.results: Dict[str, ClaimResult] = {}
        self.counts: Dict[str, int] = {status: 0 for status in STATUSES}

    def update(self, result: ClaimResult) -> None:
        """
        Record one claim result.

        Raises
        ------
        ValueError
            On a duplicate claim id or an unknown status.
        """
        if result.id in self.results:
            raise ValueError(f"claim {result.id} reported twice")
        if result.status not in self.counts:
            raise ValueError(f"unknown claim status {result.status!r}")
        self.results[result.id] = result
        self.counts[result.status] += 1

    @property
    def ok(self) -> bool:
        return self.counts["fail"] == 0

    def failures(self) -> List[ClaimResult]:
        return [self.results[k] for k in sorted(self.results) if self.results[k].status == "fail"]

    def compute(self) -> Dict[str, Any]:
        return {
            "summary": {
                "max_rank": self.max_rank,
                "alphas": self.alphas,
                "total": len(self.results),
                **self.counts,
                "ok": self.ok,
            },
            "claims": [self.results[k].to_json() for k in sorted(self.results)],
        }

"""
Verification suite for Matsuo algebras of simply-laced Weyl groups.

Checks, exactly:
  1. Transposition sets   - regularity of the noncommuting graph
  2. Identities           - unitality, spectra, explicit eigenvectors
  3. Coset axes           - spectra, fusion rules, containments, primitivity
  4. Central charges      - Gram values against the closed-form curves
  5. Doubled algebras     - negative axes, extra eigenvalues, containment
  6. Virasoro             - Kac weights, derived fusion rules, observations
  7. Axiality             - Miyamoto involutions of every basis axis

Usage:
    python -m evaluation.run_verification --max-rank 6 --alphas 1/4,1/7
"""

import json
import logging
import sys
import time
from pathlib import Path
from typing import List, Optional, Sequence

from rich.console import Console
from rich.table import Table

# Ensure project root importable
PROJECT_ROOT = Path(__file__).resolve().parent.parent
if str(PROJECT_ROOT) not in sys.path:
    sys.path.insert(0, str(PROJECT_ROOT))

from configs.settings import settings
from evaluation.claims import CLAIMS, Claim, ClaimContext, ClaimFailure
from evaluation.verification_report import ClaimResult, VerificationReport
from scalars.errors import AxialError
from scalars.field import Scalar, format_scalar, parse_rational

logger = logging.getLogger(__name__)

STATUS_STYLE = {"pass": "green", "fail": "bold red", "skipped": "yellow", "noted": "cyan"}


def parse_alphas(text: str) -> List[Scalar]:
    """Comma-separated rationals; raises ScalarParseError on malformed entries."""
    alphas = []
    for part in text.split(","):
        if part.strip():
            value = parse_rational(part)
            if value not in alphas:
                alphas.append(value)
    if not alphas:
        raise ValueError("at least one alpha is required")
    return alphas


class VerificationRunner:
    """Runs every registered claim and aggregates the outcomes."""

    def __init__(
        self,
        max_rank: int = settings.VERIFY_MAX_RANK,
        alphas: Optional[Sequence[Scalar]] = None,
        claims: Optional[Sequence[Claim]] = None,
    ):
        if max_rank < 1:
            raise ValueError("max_rank must be at least 1")
        self.alphas = list(alphas) if alphas is not None else parse_alphas(settings.VERIFY_ALPHAS)
        self.max_rank = max_rank
        self.claims = list(claims) if claims is not None else list(CLAIMS)
        self.context = ClaimContext(max_rank, self.alphas)

    def evaluate(self) -> VerificationReport:
        report = VerificationReport(self.max_rank, [format_scalar(a) for a in self.alphas])
        for i, claim in enumerate(self.claims):
            logger.info("Verifying [%d/%d] %s: %s", i + 1, len(self.claims), claim.id, claim.anchor)
            report.update(self._evaluate_single(claim))
        logger.info(
            "Verification finished: %d pass, %d fail, %d skipped, %d noted",
            report.counts["pass"], report.counts["fail"],
            report.counts["skipped"], report.counts["noted"],
        )
        return report

    def _evaluate_single(self, claim: Claim) -> ClaimResult:
        t0 = time.perf_counter()
        try:
            outcome = claim.check(self.context)
        except ClaimFailure as e:
            logger.warning("Claim %s failed: %s", claim.id, e)
            return ClaimResult(claim.id, claim.anchor, "fail", {"message": str(e)}, e.counterexample)
        except AxialError as e:
            logger.warning("Claim %s raised %s: %s", claim.id, type(e).__name__, e)
            return ClaimResult(
                claim.id, claim.anchor, "fail",
                {"message": str(e)}, {"error": type(e).__name__},
            )
        logger.debug("Claim %s took %.0f ms", claim.id, (time.perf_counter() - t0) * 1000)
        return ClaimResult(claim.id, claim.anchor, outcome.status, outcome.details)


def save_report(document: dict, directory: Path = settings.REPORT_DIR) -> Path:
    directory.mkdir(parents=True, exist_ok=True)
    output_file = directory / "verification_report.json"
    with open(output_file, "w") as f:
        json.dump(document, f, indent=2)
    return output_file


def print_summary(document: dict, console: Console) -> None:
    table = Table(title=f"Verification (max rank {document['summary']['max_rank']}, "
                        f"alpha in {', '.join(document['summary']['alphas'])})")
    table.add_column("id")
    table.add_column("claim")
    table.add_column("status")
    for claim in document["claims"]:
        style = STATUS_STYLE.get(claim["status"], "")
        table.add_row(claim["id"], claim["anchor"], f"[{style}]{claim['status']}[/{style}]")
    console.print(table)


def main():
    from cli.main import main as cli_main

    sys.exit(cli_main(["verify", *sys.argv[1:]]))


if __name__ == "__main__":
    main()

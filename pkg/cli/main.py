"""
Command-line front end.

    python -m cli analyze --family A --rank 4 --alpha 1/4 --coset 1..4/1..3
    python -m cli verify --max-rank 6 --alphas 1/4,1/7,1/32 --save
    python -m cli kac 5 3 --halved --fusion

Exit codes: 0 success, 1 engine error or failed verification, 2 usage error
(including a non-coprime or out-of-range minimal model).
"""

import argparse
import json
import logging
import sys
from typing import Any, Dict, List, Optional, Tuple

from pydantic import ValidationError
from rich.console import Console
from rich.table import Table

from configs.settings import settings
from evaluation.run_verification import VerificationRunner, parse_alphas, print_summary, save_report
from fusion.tables import FusionTable
from pipeline.analysis_pipeline import run_analysis_pipeline
from pipeline.analysis_request import CANDIDATE_SOURCES, AnalysisRequest
from scalars.errors import AxialError
from scalars.field import FieldMode, format_scalar
from virasoro.minimal_models import (
    InvalidModelError,
    MinimalModel,
    central_charge_pq,
    derive_algebra_fusion_rules,
    kac_markdown,
    kac_table,
)

logger = logging.getLogger(__name__)


def _alphas_arg(text: str):
    try:
        return parse_alphas(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e))


def _pair_arg(text: str) -> Tuple[int, int]:
    try:
        p, q = (int(part) for part in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected P,Q, got {text!r}")
    return p, q


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="matsuo",
        description=f"{settings.PROJECT_NAME}: exact eigenspace, fusion and central charge "
                    "computations in Matsuo algebras.",
    )
    parser.add_argument("--log-level", default=settings.LOG_LEVEL, help="logging level (stderr)")
    sub = parser.add_subparsers(dest="command", required=True)

    analyze = sub.add_parser("analyze", help="decompose one idempotent of one algebra")
    analyze.add_argument("--family", required=True, choices=["A", "D", "E"])
    analyze.add_argument("--rank", required=True, type=int)
    analyze.add_argument("--alpha", default=settings.DEFAULT_ALPHA, help='"p/q" or "symbolic"')
    analyze.add_argument("--hat", action="store_true", help="use the signed double of the algebra")
    target = analyze.add_mutually_exclusive_group(required=True)
    target.add_argument("--axis", type=int, help="index of a basis axis")
    target.add_argument("--identity", help='support of a subalgebra identity, e.g. "1..4"')
    target.add_argument("--coset", help='OUTER/INNER supports of a coset axis, e.g. "1..5/1..4"')
    analyze.add_argument("--candidates", choices=CANDIDATE_SOURCES,
                         help="use closed-form eigenvalue candidates (needed for symbolic alpha)")
    analyze.add_argument("--format", dest="output_format", default="json", choices=["json", "table"])
    analyze.add_argument("--kac-hits", type=_pair_arg, metavar="P,Q",
                         help="match eigenvalues against halved Kac weights of the (P,Q) model")

    verify = sub.add_parser("verify", help="run the full verification suite")
    verify.add_argument("--max-rank", type=int, default=settings.VERIFY_MAX_RANK)
    verify.add_argument("--alphas", type=_alphas_arg, default=None, metavar="A1,A2,...")
    verify.add_argument("--save", action="store_true", help="write the JSON report to the report directory")
    verify.add_argument("--format", dest="output_format", default="json", choices=["json", "table"])

    kac = sub.add_parser("kac", help="Kac table of a Virasoro minimal model")
    kac.add_argument("p", type=int)
    kac.add_argument("q", type=int)
    kac.add_argument("--halved", action="store_true", help="print h/2 instead of h")
    kac.add_argument("--fusion", action="store_true", help="also print the derived algebra fusion rules")
    kac.add_argument("--format", dest="output_format", default="markdown", choices=["markdown", "json"])
    return parser


def _emit_json(document: Any) -> None:
    print(json.dumps(document, indent=2))


def _emit_error(error: Exception) -> None:
    _emit_json({"error": {"type": type(error).__name__, "message": str(error)}})


# ──────────────────────────────────────────────────────────────────────────
# analyze
# ──────────────────────────────────────────────────────────────────────────

def _print_analysis_tables(document: Dict[str, Any], console: Console) -> None:
    algebra = document["algebra"]
    summary = Table(title=f"{document['idempotent']['description']} in {algebra['system']}")
    summary.add_column("field")
    summary.add_column("value")
    summary.add_row("alpha", algebra["alpha"])
    summary.add_row("doubled", str(algebra["hat"]))
    summary.add_row("dimension", str(algebra["dimension"]))
    summary.add_row("central charge", document["central_charge"])
    summary.add_row("complete", str(document["complete"]))
    summary.add_row("primitive", str(document["primitive"]))
    console.print(summary)

    spaces = Table(title="eigenspaces")
    spaces.add_column("eigenvalue")
    spaces.add_column("dim", justify="right")
    for space in document["eigendecomposition"]:
        spaces.add_row(space["eigenvalue"], str(space["dim"]))
    console.print(spaces)

    if document["fusion_table"] is not None:
        table = FusionTable.from_json(document["fusion_table"], FieldMode(algebra["mode"]), name="fusion")
        console.print(table.to_text(), markup=False)
    for grading in document["gradings"]:
        console.print(f"grading: + {grading['plus']}  - {grading['minus']}", markup=False)


def cmd_analyze(args: argparse.Namespace, console: Console) -> int:
    req = AnalysisRequest(
        family=args.family,
        rank=args.rank,
        alpha=args.alpha,
        hat=args.hat,
        axis=args.axis,
        identity=args.identity,
        coset=args.coset,
        candidates=args.candidates,
        output_format=args.output_format,
        kac_hits=args.kac_hits,
    )
    document = run_analysis_pipeline(req)
    if req.output_format == "table":
        _print_analysis_tables(document, console)
    else:
        _emit_json(document)
    return 0


# ──────────────────────────────────────────────────────────────────────────
# verify
# ──────────────────────────────────────────────────────────────────────────

def cmd_verify(args: argparse.Namespace, console: Console) -> int:
    runner = VerificationRunner(max_rank=args.max_rank, alphas=args.alphas)
    report = runner.evaluate()
    document = report.compute()
    if args.save:
        output_file = save_report(document)
        logger.info("Verification report saved to %s", output_file)
    if args.output_format == "table":
        print_summary(document, console)
    else:
        _emit_json(document)
    return 0 if report.ok else 1


# ──────────────────────────────────────────────────────────────────────────
# kac
# ──────────────────────────────────────────────────────────────────────────

def cmd_kac(args: argparse.Namespace, console: Console) -> int:
    model = MinimalModel(args.p, args.q)
    fusion = derive_algebra_fusion_rules(model) if args.fusion else None
    if args.output_format == "json":
        document: Dict[str, Any] = {
            "model": [model.p, model.q],
            "central_charge": format_scalar(central_charge_pq(model)),
            "halved": args.halved,
            "weights": [[format_scalar(h) for h in row] for row in kac_table(model, args.halved)],
        }
        if fusion is not None:
            document["fusion_table"] = fusion.to_json()
        _emit_json(document)
        return 0

    print(kac_markdown(model, args.halved))
    if fusion is not None:
        print()
        print(fusion.to_text())
    return 0


COMMANDS = {"analyze": cmd_analyze, "verify": cmd_verify, "kac": cmd_kac}


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)

    logging.basicConfig(
        level=args.log_level.upper(),
        format="%(asctime)s | %(name)s | %(levelname)s | %(message)s",
        stream=sys.stderr,
    )
    console = Console()

    try:
        return COMMANDS[args.command](args, console)
    except ValidationError as e:
        _emit_json({"error": {"type": "ValidationError", "message": str(e)}})
        return 2
    except InvalidModelError as e:
        _emit_error(e)
        return 2
    except AxialError as e:
        logger.error("%s: %s", type(e).__name__, e)
        _emit_error(e)
        return 1
    except ValueError as e:
        _emit_error(e)
        return 2

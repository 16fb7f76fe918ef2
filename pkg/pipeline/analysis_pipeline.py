import logging
from typing import Any, Dict

from algebra.idempotents import Idempotent, axis_idempotent, central_charge, coset_axis, subalgebra_identity
from algebra.matsuo import AlgebraSpace, construct_algebra
from fusion.gradings import find_z2_gradings
from fusion.miyamoto import primitivity
from fusion.tables import fusion_table
from pipeline.analysis_request import AnalysisRequest
from roots.transpositions import build_transposition_set, parabolic_subset
from scalars.field import format_scalar
from spectral.eigen import CandidatesRequiredError, default_candidates, eigendecompose
from virasoro.minimal_models import MinimalModel, observed_kac_hits

logger = logging.getLogger(__name__)


def build_idempotent(A: AlgebraSpace, req: AnalysisRequest) -> Idempotent:
    tset = A.transpositions
    if req.axis is not None:
        return axis_idempotent(A, tset[req.axis])
    if req.identity is not None:
        return subalgebra_identity(A, parabolic_subset(tset, req.identity_support()))
    outer, inner = req.coset_supports()
    return coset_axis(A, parabolic_subset(tset, outer), parabolic_subset(tset, inner))


def run_analysis_pipeline(req: AnalysisRequest) -> Dict[str, Any]:
    """
    Run one analysis: build algebra → idempotent → eigendecomposition →
    fusion table → gradings.

    Parameters
    ----------
    req : AnalysisRequest
        Validated request.

    Returns
    -------
    Dict[str, Any]
        Output document with a fixed key order. Fusion data is present
        only for complete decompositions.

    Raises
    ------
    AxialError
        Any engine error (singular alpha, degenerate idempotent, missing
        candidates, dimension cap).
    """
    system = req.root_system()
    tset = build_transposition_set(system)
    A = construct_algebra(tset, req.alpha_scalar(), req.hat)
    x = build_idempotent(A, req)
    logger.info("Analysing %s in %r", x.description, A)

    candidates = None
    if req.candidates == "closed-form":
        candidates = default_candidates(A, x)
        if candidates is None:
            raise CandidatesRequiredError(f"no closed-form eigenvalues known for {x.description}")
    dec = eigendecompose(A, x, candidates)

    document: Dict[str, Any] = {
        "request": req.model_dump(mode="json"),
        "algebra": {
            "system": str(system),
            "hat": A.hat,
            "alpha": format_scalar(A.alpha),
            "mode": A.mode.value,
            "dimension": A.dimension,
        },
        "idempotent": x.to_json(),
        "central_charge": format_scalar(central_charge(A, x)),
        "complete": dec.complete,
        "missing": [format_scalar(v) for v in dec.missing],
        "eigendecomposition": dec.to_json(),
        "fusion_table": None,
        "gradings": [],
        "primitive": None,
    }

    if dec.complete:
        table = fusion_table(A, dec)
        document["fusion_table"] = table.to_json()
        document["gradings"] = [g.to_json() for g in find_z2_gradings(table)]
        document["primitive"] = primitivity(dec)
    else:
        logger.warning("Skipping fusion analysis of %s: decomposition incomplete", x.description)

    if req.kac_hits is not None:
        model = MinimalModel(*req.kac_hits)
        document["kac_hits"] = observed_kac_hits(dec.eigenvalues(), model)

    return document

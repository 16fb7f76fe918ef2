"""
Miyamoto involutions, the axial-representation property and primitivity.
"""

import logging
from dataclasses import dataclass
from typing import Dict, List, Optional

from algebra.idempotents import axis_idempotent
from algebra.matsuo import AlgebraSpace, AlgVector, gram, multiply
from fusion.gradings import Grading, is_valid_grading, standard_grading
from fusion.tables import FusionTable, axis_table, fusion_table
from scalars.errors import AxialError
from scalars.field import FieldMode, format_scalar
from spectral import closed_forms
from spectral.eigen import Eigendecomposition, IncompleteDecompositionError, eigendecompose
from spectral.matrices import ExactMatrix, inverse

logger = logging.getLogger(__name__)


class InvalidGradingError(AxialError):
    pass


class AutomorphismError(AxialError):
    """A Miyamoto map failed to be an involutive automorphism or isometry."""
    pass


@dataclass(frozen=True, eq=False)
class InvolutionMatrix:
    matrix: ExactMatrix
    grading: Grading

    def apply(self, A: AlgebraSpace, v: AlgVector) -> AlgVector:
        return A.from_column(self.matrix.apply(A.to_column(v)))


def miyamoto_involution(
    A: AlgebraSpace,
    dec: Eigendecomposition,
    g: Grading,
    table: Optional[FusionTable] = None,
) -> InvolutionMatrix:
    """
    The linear map acting as +1 on even and -1 on odd eigenspaces.

    Parameters
    ----------
    A : AlgebraSpace
        Ambient algebra.
    dec : Eigendecomposition
        Complete decomposition of the idempotent.
    g : Grading
        Grading of the empirical fusion table of ``dec``.
    table : FusionTable, optional
        Precomputed empirical table; computed when omitted.

    Raises
    ------
    InvalidGradingError
        If ``g`` does not grade the empirical table.
    AutomorphismError
        If the map does not square to the identity, respect products on
        all basis pairs, or preserve the form.
    """
    if not dec.complete:
        raise IncompleteDecompositionError("Miyamoto involutions need a complete decomposition")
    table = table or fusion_table(A, dec)
    if not is_valid_grading(table, g):
        raise InvalidGradingError(f"{g.to_json()} is not a grading of {table.name}")

    n = A.dimension
    if g.is_trivial:
        return InvolutionMatrix(ExactMatrix.identity(n, A.mode), g)

    eigenvectors, signed = [], []
    for space in dec.spaces:
        sign = g.sign(space.eigenvalue)
        for v in space.basis:
            eigenvectors.append(A.to_column(v))
            signed.append(A.to_column(v if sign > 0 else -v))
    P = ExactMatrix.from_columns(eigenvectors, A.mode)
    tau = ExactMatrix.from_columns(signed, A.mode) @ inverse(P)
    involution = InvolutionMatrix(tau, g)

    if not (tau @ tau).is_identity():
        raise AutomorphismError("Miyamoto map does not square to the identity")

    images = [A.from_column(col) for col in tau.columns()]
    for i in range(n):
        e_i = A.basis_vector(i)
        for j in range(i, n):
            e_j = A.basis_vector(j)
            if involution.apply(A, multiply(A, e_i, e_j)) != multiply(A, images[i], images[j]):
                raise AutomorphismError(f"not an automorphism on basis pair ({i}, {j})")
            if gram(A, images[i], images[j]) != gram(A, e_i, e_j):
                raise AutomorphismError(f"not an isometry on basis pair ({i}, {j})")

    logger.debug("Miyamoto involution of %s verified", dec.idempotent.description)
    return involution


def primitivity(dec: Eigendecomposition) -> bool:
    """True iff the 1-eigenspace is one-dimensional."""
    if not dec.complete:
        raise IncompleteDecompositionError("primitivity needs a complete decomposition")
    one = dec.space_algebra.one_scalar
    return len(dec.space(one)) == 1


def axis_report(A: AlgebraSpace, index: int) -> Dict[str, object]:
    """
    Axis checks for the basis axis of transposition ``index`` in a plain
    algebra: spectrum, primitivity, fusion containment in the axis table
    and the conjugation action of its Miyamoto involution.
    """
    tset = A.transpositions
    d = tset[index]
    x = axis_idempotent(A, d)
    candidates = None if A.mode == FieldMode.RATIONAL else closed_forms.axis_eigenvalues(A.alpha)
    dec = eigendecompose(A, x, candidates)
    report: Dict[str, object] = {
        "axis": d.to_json(),
        "complete": dec.complete,
        "dims": {format_scalar(k): v for k, v in dec.dims().items()},
    }
    if not dec.complete:
        report["holds"] = False
        return report

    table = fusion_table(A, dec)
    reference = axis_table(A.alpha)
    violations = table.violations(reference)
    tau = miyamoto_involution(A, dec, standard_grading(table, A.alpha), table)

    wrong: List[str] = []
    for c in range(len(tset)):
        image = tau.apply(A, A.basis_vector(c))
        if image != A.basis_vector(tset.conjugate_index(c, index)):
            wrong.append(tset[c].to_json())

    report.update({
        "primitive": primitivity(dec),
        "fusion_violations": violations,
        "conjugation_failures": wrong,
    })
    report["holds"] = report["primitive"] and not violations and not wrong
    return report


def check_axial_representation(A: AlgebraSpace) -> bool:
    """
    True iff for every d the Miyamoto involution of the axis d (grading
    {1, 0} / {alpha}) maps every axis c to the axis c^d.
    """
    if A.hat:
        raise AxialError("axial representation checks apply to plain algebras only")
    for index in range(len(A.transpositions)):
        report = axis_report(A, index)
        if not report["holds"]:
            logger.warning("Axial representation fails at %s: %s", report["axis"], report)
            return False
    logger.info("Axial representation verified on %s", A.transpositions.id)
    return True

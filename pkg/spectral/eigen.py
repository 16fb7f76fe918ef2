"""
Eigendecompositions of adjoint maps of idempotents.

In rational mode the eigenvalues are discovered independently as the
rational roots of the minimal polynomial of ad(x); in symbolic mode they
have to be supplied as candidates. Either way every eigenspace is an exact
kernel and completeness is certified by the dimension count.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence

from algebra.idempotents import Idempotent, Provenance
from algebra.matsuo import AlgebraSpace, AlgVector, adjoint_columns
from configs.settings import settings
from scalars.errors import AxialError
from scalars.field import FieldMode, Scalar, format_scalar
from spectral import closed_forms
from spectral.matrices import (
    ExactMatrix,
    inverse,
    kernel,
    minimal_polynomial,
    rational_roots,
    span_contains,
)

logger = logging.getLogger(__name__)


class DimensionCapError(AxialError):
    pass


class CandidatesRequiredError(AxialError):
    """Symbolic decompositions need candidate eigenvalues."""
    pass


class DegenerateIdempotentError(AxialError):
    pass


class IncompleteDecompositionError(AxialError):
    pass


class ContainmentError(AxialError):
    pass


def ad_matrix(A: AlgebraSpace, x: AlgVector) -> ExactMatrix:
    """Matrix of b -> x·b in the basis of A."""
    if A.dimension > settings.AXIAL_MAX_DIM:
        raise DimensionCapError(
            f"dimension {A.dimension} exceeds AXIAL_MAX_DIM={settings.AXIAL_MAX_DIM}"
        )
    return ExactMatrix.from_columns(adjoint_columns(A, x), A.mode, space=A)


@dataclass
class EigenSpace:
    eigenvalue: Scalar
    basis: List[AlgVector]

    @property
    def dim(self) -> int:
        return len(self.basis)


@dataclass
class Eigendecomposition:
    """
    Eigenspaces of ad(x) for one idempotent x.

    ``spaces`` holds only nonzero eigenspaces; ``missing`` lists candidate
    eigenvalues whose eigenspace turned out to be zero.
    """

    idempotent: Idempotent
    spaces: List[EigenSpace]
    complete: bool
    dimension: int
    missing: List[Scalar] = field(default_factory=list)
    _inverse: Optional[ExactMatrix] = field(default=None, init=False, repr=False)

    @property
    def space_algebra(self) -> AlgebraSpace:
        return self.idempotent.space

    def eigenvalues(self) -> List[Scalar]:
        return [s.eigenvalue for s in self.spaces]

    def space(self, eigenvalue: Scalar) -> List[AlgVector]:
        for s in self.spaces:
            if s.eigenvalue == eigenvalue:
                return s.basis
        return []

    def dims(self) -> Dict[Scalar, int]:
        return {s.eigenvalue: s.dim for s in self.spaces}

    def eigenbasis(self) -> List[AlgVector]:
        return [v for s in self.spaces for v in s.basis]

    def resolve(self, v: AlgVector) -> Dict[Scalar, AlgVector]:
        """
        Split ``v`` into its eigenspace components.

        Raises
        ------
        IncompleteDecompositionError
            If the eigenvectors do not span the algebra.
        """
        if not self.complete:
            raise IncompleteDecompositionError("cannot resolve in an incomplete eigenbasis")
        A = self.space_algebra
        if self._inverse is None:
            columns = [A.to_column(b) for b in self.eigenbasis()]
            self._inverse = inverse(ExactMatrix.from_columns(columns, A.mode))
        coordinates = self._inverse.apply(A.to_column(v))

        components: Dict[Scalar, AlgVector] = {}
        offset = 0
        for s in self.spaces:
            component = A.zero()
            for k, b in enumerate(s.basis):
                c = coordinates[offset + k]
                if not c.is_zero():
                    component = component + b.scale(c)
            offset += s.dim
            if not component.is_zero():
                components[s.eigenvalue] = component
        return components

    def to_json(self) -> List[Dict[str, object]]:
        return [
            {
                "eigenvalue": format_scalar(s.eigenvalue),
                "dim": s.dim,
                "basis": [v.to_json() for v in s.basis],
            }
            for s in self.spaces
        ]


def eigendecompose(
    A: AlgebraSpace,
    x: Idempotent,
    candidates: Optional[Sequence[Scalar]] = None,
) -> Eigendecomposition:
    """
    Decompose A into eigenspaces of ad(x).

    Parameters
    ----------
    A : AlgebraSpace
        Ambient algebra.
    x : Idempotent
        Nonzero idempotent of A.
    candidates : Sequence[Scalar], optional
        Eigenvalues to test. Required in symbolic mode; in rational mode
        the minimal polynomial supplies them when omitted.

    Returns
    -------
    Eigendecomposition
        ``complete`` is False when the eigenspaces do not span A.
    """
    if x.degenerate:
        raise DegenerateIdempotentError(f"{x.description or 'idempotent'} is zero")

    M = ad_matrix(A, x.vector)
    if candidates is None:
        if A.mode != FieldMode.RATIONAL:
            raise CandidatesRequiredError("symbolic eigendecomposition needs candidate eigenvalues")
        eigenvalues = rational_roots(minimal_polynomial(M))
    else:
        eigenvalues = closed_forms.dedupe(candidates)
        if A.mode == FieldMode.RATIONAL:
            eigenvalues = sorted(eigenvalues, reverse=True)

    spaces: List[EigenSpace] = []
    missing: List[Scalar] = []
    for value in eigenvalues:
        basis = kernel(M.shifted(value))
        if basis:
            spaces.append(EigenSpace(value, basis))
        else:
            missing.append(value)

    total = sum(s.dim for s in spaces)
    complete = total == A.dimension
    if complete:
        logger.info(
            "Decomposed %s: %s",
            x.description,
            ", ".join(f"{format_scalar(s.eigenvalue)}^{s.dim}" for s in spaces),
        )
    else:
        logger.warning(
            "Incomplete decomposition of %s: eigenspaces span %d of %d dimensions",
            x.description, total, A.dimension,
        )
    return Eigendecomposition(x, spaces, complete, A.dimension, missing)


def default_candidates(A: AlgebraSpace, x: Idempotent) -> Optional[List[Scalar]]:
    """Closed-form eigenvalue candidates for axes, identities and coset axes of A-type algebras."""
    if x.provenance == Provenance.AXIS:
        return closed_forms.axis_eigenvalues(A.alpha)
    if A.transpositions.id.family != "A":
        return None
    if x.provenance == Provenance.SUBALGEBRA_IDENTITY:
        return closed_forms.identity_eigenvalues(A.alpha, x.point_count, A.hat)
    if x.provenance == Provenance.COSET_AXIS:
        return closed_forms.coset_eigenvalues(A.alpha, x.point_count, x.inner_point_count, A.hat)
    return None


def _decompose_for_containment(A: AlgebraSpace, x: Idempotent) -> Eigendecomposition:
    candidates = None if A.mode == FieldMode.RATIONAL else default_candidates(A, x)
    return eigendecompose(A, x, candidates)


def _columns(A: AlgebraSpace, dec: Eigendecomposition, *eigenvalues: Scalar) -> List[List[Scalar]]:
    seen = []
    columns = []
    for value in eigenvalues:
        if value in seen:
            continue
        seen.append(value)
        columns.extend(A.to_column(v) for v in dec.space(value))
    return columns


def check_containments(
    A: AlgebraSpace,
    id_m: Idempotent,
    id_l: Idempotent,
    dec_m: Optional[Eigendecomposition] = None,
    dec_l: Optional[Eigendecomposition] = None,
) -> Dict[str, object]:
    """
    Verify the eigenspace containments between nested identities
    id_{Sym(m)} and id_{Sym(l)}, l <= m.

    Plain algebras: ad(id_m) and ad(id_l) commute,
    A^{id_l}_1 <= A^{id_m}_1, A^{id_m}_0 <= A^{id_l}_0 and
    A^{id_m}_{eta(m)} <= A^{id_l}_0 + A^{id_l}_{eta(l)}.
    Doubled algebras with l = m - 1: ad(id_m) and ad(id_l) commute and
    A^{id_m}_{eta_hat(m)} <= A^{id_l}_{eta(l)} + A^{id_l}_{eta_hat(l)}.
    For l < m - 1 further eigenvalues occur in the doubled algebra; there
    commutation is only reported.

    Raises
    ------
    ContainmentError
        On any failed containment or an incomplete decomposition.
    """
    dec_m = dec_m or _decompose_for_containment(A, id_m)
    dec_l = dec_l or _decompose_for_containment(A, id_l)
    if not (dec_m.complete and dec_l.complete):
        raise ContainmentError("containment checks need complete decompositions")

    m, l = id_m.point_count, id_l.point_count
    alpha = A.alpha
    one, zero = A.one_scalar, A.zero_scalar

    M_m = ad_matrix(A, id_m.vector)
    M_l = ad_matrix(A, id_l.vector)
    commute = (M_m @ M_l) == (M_l @ M_m)
    report: Dict[str, object] = {"m": m, "l": l, "commute": commute, "containments": {}}

    if not commute and (not A.hat or l == m - 1):
        raise ContainmentError(f"ad(id_{m}) and ad(id_{l}) do not commute")
    if not commute:
        logger.warning("ad(id_%d) and ad(id_%d) do not commute in the doubled algebra", m, l)

    checks = []
    if not A.hat:
        checks = [
            ("one", _columns(A, dec_m, one), _columns(A, dec_l, one)),
            ("zero", _columns(A, dec_l, zero), _columns(A, dec_m, zero)),
            (
                "eta",
                _columns(A, dec_l, zero, closed_forms.eta(alpha, l)),
                _columns(A, dec_m, closed_forms.eta(alpha, m)),
            ),
        ]
    elif l == m - 1:
        checks = [
            (
                "eta_hat",
                _columns(A, dec_l, closed_forms.eta(alpha, l), closed_forms.eta_hat(alpha, l)),
                _columns(A, dec_m, closed_forms.eta_hat(alpha, m)),
            )
        ]

    for name, container, contained in checks:
        if not span_contains(container, contained, A.mode):
            raise ContainmentError(f"containment '{name}' fails for m={m}, l={l}")
        report["containments"][name] = {"holds": True, "dim": len(contained)}

    logger.info("Containments for m=%d, l=%d hold: %s", m, l, sorted(report["containments"]))
    return report

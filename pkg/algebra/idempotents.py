"""
Idempotents of Matsuo algebras: axes, subalgebra identities, coset axes.

Every Idempotent is checked (v·v = v) before it is handed out, so the
spectral code downstream can rely on it.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Dict, List, Sequence, Tuple, Union

from algebra.matsuo import AlgebraSpace, AlgVector, gram, multiply
from roots.transpositions import (
    Transposition,
    is_conjugation_closed,
    regularity_degree,
)
from scalars.errors import AxialError
from scalars.field import Scalar

logger = logging.getLogger(__name__)


class NotIdempotentError(AxialError):
    pass


class SingularAlphaError(AxialError):
    """1 + alpha k / 2 vanishes, so the subalgebra has no identity of this form."""
    pass


class SubsetError(AxialError):
    pass


class Provenance(str, Enum):
    AXIS = "axis"
    SUBALGEBRA_IDENTITY = "subalgebra_identity"
    COSET_AXIS = "coset_axis"
    USER = "user"


@dataclass(frozen=True, eq=False)
class Idempotent:
    vector: AlgVector
    provenance: Provenance
    description: str = ""
    generators: Tuple[Transposition, ...] = ()
    inner_generators: Tuple[Transposition, ...] = ()

    @property
    def space(self) -> AlgebraSpace:
        return self.vector.space

    @property
    def degenerate(self) -> bool:
        return self.vector.is_zero()

    @property
    def point_count(self) -> int:
        """Number of coordinates touched by the generating transpositions."""
        return len(support_of(self.generators))

    @property
    def inner_point_count(self) -> int:
        return len(support_of(self.inner_generators))

    def to_json(self) -> Dict[str, object]:
        return {
            "provenance": self.provenance.value,
            "description": self.description,
            "degenerate": self.degenerate,
            "vector": self.vector.to_json(),
        }


def support_of(transpositions: Sequence[Transposition]) -> frozenset:
    points = set()
    for t in transpositions:
        points |= t.support
    return frozenset(points)


def make_idempotent(
    A: AlgebraSpace,
    vector: AlgVector,
    provenance: Provenance = Provenance.USER,
    description: str = "",
    generators: Sequence[Transposition] = (),
    inner_generators: Sequence[Transposition] = (),
) -> Idempotent:
    """Wrap ``vector`` after checking vector·vector = vector."""
    if multiply(A, vector, vector) != vector:
        raise NotIdempotentError(f"{description or 'vector'} is not idempotent")
    return Idempotent(vector, provenance, description, tuple(generators), tuple(inner_generators))


def axis_idempotent(A: AlgebraSpace, t: Transposition, sign: int = 1) -> Idempotent:
    label = "+" if sign > 0 else "-"
    return make_idempotent(
        A, A.axis(t, sign), Provenance.AXIS, f"axis {label}{t}", generators=(t,)
    )


def _check_members(A: AlgebraSpace, E: Sequence[Transposition]) -> None:
    missing = [t for t in E if t not in A.transpositions]
    if missing:
        raise SubsetError(f"{len(missing)} transpositions are not roots of {A.transpositions.id}")


def identity_coefficient(A: AlgebraSpace, k: int) -> Scalar:
    """1 / (1 + alpha k / 2)."""
    denominator = 1 + A.half_alpha * k
    if denominator.is_zero():
        raise SingularAlphaError(f"1 + alpha*{k}/2 vanishes at alpha = {A.alpha}")
    return 1 / denominator


def subalgebra_identity(A: AlgebraSpace, E: Sequence[Transposition]) -> Idempotent:
    """
    Identity of the subalgebra spanned by the plus-signed axes of ``E``.

    Parameters
    ----------
    A : AlgebraSpace
        Ambient algebra.
    E : Sequence[Transposition]
        Conjugation-closed subset with a regular noncommuting graph.

    Returns
    -------
    Idempotent
        (1 / (1 + alpha k / 2)) * sum of e over E. Empty E gives the
        degenerate zero idempotent.
    """
    E = sorted(set(E))
    if not E:
        return Idempotent(A.zero(), Provenance.SUBALGEBRA_IDENTITY, "identity of the trivial group")

    _check_members(A, E)
    if not is_conjugation_closed(E):
        raise SubsetError("subset is not closed under conjugation")
    k = regularity_degree(E)
    vector = A.sum_of(E).scale(identity_coefficient(A, k))

    for t in E:
        axis = A.axis(t)
        if multiply(A, vector, axis) != axis:
            raise NotIdempotentError(f"identity candidate does not fix the axis {t}")

    points = sorted(support_of(E))
    description = f"identity of {len(E)} transpositions on points {points}"
    logger.debug("Built %s (k=%d)", description, k)
    return make_idempotent(A, vector, Provenance.SUBALGEBRA_IDENTITY, description, generators=E)


def algebra_identity(A: AlgebraSpace) -> Idempotent:
    return subalgebra_identity(A, list(A.transpositions))


def coset_axis(A: AlgebraSpace, E: Sequence[Transposition], F: Sequence[Transposition]) -> Idempotent:
    """
    id_E - id_F for F contained in E.

    Raises
    ------
    SubsetError
        If F is not contained in E.
    NotIdempotentError
        If the difference fails to be idempotent or to annihilate id_F.
    """
    if not set(F) <= set(E):
        raise SubsetError("inner transposition set is not contained in the outer one")
    id_e = subalgebra_identity(A, E)
    id_f = subalgebra_identity(A, F)
    vector = id_e.vector - id_f.vector

    if not multiply(A, vector, id_f.vector).is_zero():
        raise NotIdempotentError("coset axis does not annihilate the inner identity")

    description = (
        f"coset axis on points {sorted(support_of(E))} / {sorted(support_of(F))}"
    )
    idem = make_idempotent(
        A, vector, Provenance.COSET_AXIS, description,
        generators=sorted(set(E)), inner_generators=sorted(set(F)),
    )
    if idem.degenerate:
        logger.warning("Degenerate coset axis: %s", description)
    return idem


def coset_chain(A: AlgebraSpace, subsets: Sequence[Sequence[Transposition]]) -> List[Idempotent]:
    """Coset axes of consecutive members of an increasing chain of subsets."""
    return [coset_axis(A, outer, inner) for inner, outer in zip(subsets, subsets[1:])]


def central_charge(A: AlgebraSpace, x: Union[AlgVector, Idempotent]) -> Scalar:
    """Half the norm of ``x`` under the algebra form."""
    vector = x.vector if isinstance(x, Idempotent) else x
    return gram(A, vector, vector) / 2

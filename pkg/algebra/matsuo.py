"""
Matsuo algebras A(G, D) and their signed doubles.

The basis is indexed by transpositions (and a sign in the doubled
algebra). Structure constants are produced on demand from the cached root
data of the TranspositionSet:

    c_e · d_f = d_f                              if c = d and e = f
              = (alpha/2)(c_e + d_f - (c^d)_{ef})  if c, d do not commute
              = 0                                  otherwise

and the form is 1, alpha/2, 0 in the same three cases.
"""

import logging
from dataclasses import dataclass
from typing import Dict, Iterable, Iterator, List, Mapping, Tuple, Union

from roots.transpositions import Transposition, TranspositionSet
from scalars.errors import AxialError
from scalars.field import FieldMode, Scalar, format_scalar, parse_scalar

logger = logging.getLogger(__name__)


class InvalidAlphaError(AxialError, ValueError):
    pass


class ForeignVectorError(AxialError):
    """A vector was combined with an algebra it does not belong to."""
    pass


@dataclass(frozen=True, order=True)
class BasisLabel:
    index: int
    sign: int = 1

    def to_json(self, tset: TranspositionSet) -> str:
        return ("+" if self.sign > 0 else "-") + tset[self.index].to_json()


class AlgVector:
    """
    Sparse immutable vector: a zero-free map BasisLabel -> Scalar.
    """

    __slots__ = ("space", "_coeffs")

    def __init__(self, space: "AlgebraSpace", coeffs: Mapping[BasisLabel, Scalar]):
        self.space = space
        self._coeffs: Dict[BasisLabel, Scalar] = {
            label: value for label, value in coeffs.items() if not value.is_zero()
        }

    def _check(self, other: "AlgVector") -> None:
        if other.space is not self.space:
            raise ForeignVectorError("vectors belong to different algebras")

    def __add__(self, other: "AlgVector") -> "AlgVector":
        self._check(other)
        merged = dict(self._coeffs)
        for label, value in other._coeffs.items():
            merged[label] = merged[label] + value if label in merged else value
        return AlgVector(self.space, merged)

    def __sub__(self, other: "AlgVector") -> "AlgVector":
        return self + (-other)

    def __neg__(self) -> "AlgVector":
        return AlgVector(self.space, {label: -value for label, value in self._coeffs.items()})

    def scale(self, factor: Union[Scalar, int]) -> "AlgVector":
        if isinstance(factor, int):
            factor = Scalar.constant(self.space.mode, factor)
        return AlgVector(self.space, {label: factor * value for label, value in self._coeffs.items()})

    def __rmul__(self, factor: Union[Scalar, int]) -> "AlgVector":
        return self.scale(factor)

    def coefficient(self, label: BasisLabel) -> Scalar:
        return self._coeffs.get(label, self.space.zero_scalar)

    def items(self) -> List[Tuple[BasisLabel, Scalar]]:
        return sorted(self._coeffs.items(), key=lambda item: self.space.position(item[0]))

    def terms(self) -> List[Tuple[BasisLabel, Scalar]]:
        """Unordered (label, coefficient) pairs."""
        return list(self._coeffs.items())

    def support(self) -> List[BasisLabel]:
        return [label for label, _ in self.items()]

    def is_zero(self) -> bool:
        return not self._coeffs

    def __len__(self) -> int:
        return len(self._coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, AlgVector):
            return NotImplemented
        return self.space is other.space and self._coeffs == other._coeffs

    __hash__ = None

    def to_json(self) -> Dict[str, str]:
        tset = self.space.transpositions
        return {label.to_json(tset): format_scalar(value) for label, value in self.items()}

    def __repr__(self) -> str:
        body = ", ".join(f"{k}: {v}" for k, v in self.to_json().items())
        return f"AlgVector({{{body}}})"


class AlgebraSpace:
    """
    A Matsuo algebra over a fixed field mode.

    Parameters
    ----------
    transpositions : TranspositionSet
        The underlying (G, D).
    alpha : Scalar
        Rational value or the formal parameter.
    hat : bool
        Build the signed double with basis d_+, d_-.
    """

    def __init__(self, transpositions: TranspositionSet, alpha: Scalar, hat: bool = False):
        self.transpositions = transpositions
        self.alpha = alpha
        self.hat = hat
        self.mode: FieldMode = alpha.mode
        self.zero_scalar = Scalar.zero(self.mode)
        self.one_scalar = Scalar.one(self.mode)
        self.half_alpha = alpha / 2
        self._minus_half_alpha = -self.half_alpha

        n = len(transpositions)
        signs = (1, -1) if hat else (1,)
        self.labels: Tuple[BasisLabel, ...] = tuple(
            BasisLabel(i, sign) for sign in signs for i in range(n)
        )
        self._position = {label: k for k, label in enumerate(self.labels)}

    @property
    def dimension(self) -> int:
        return len(self.labels)

    def __repr__(self) -> str:
        kind = "hat" if self.hat else "plain"
        return f"AlgebraSpace({self.transpositions.id}, {kind}, alpha={self.alpha})"

    def position(self, label: BasisLabel) -> int:
        return self._position[label]

    def label_of(self, t: Transposition, sign: int = 1) -> BasisLabel:
        return BasisLabel(self.transpositions.index_of(t), sign)

    # ── vectors ──────────────────────────────────────────────────────────

    def zero(self) -> AlgVector:
        return AlgVector(self, {})

    def basis_vector(self, label: Union[BasisLabel, int]) -> AlgVector:
        if isinstance(label, int):
            label = self.labels[label]
        return AlgVector(self, {label: self.one_scalar})

    def axis(self, t: Transposition, sign: int = 1) -> AlgVector:
        return self.basis_vector(self.label_of(t, sign))

    def vector(self, coeffs: Mapping[BasisLabel, Scalar]) -> AlgVector:
        return AlgVector(self, coeffs)

    def sum_of(self, transpositions: Iterable[Transposition], sign: int = 1) -> AlgVector:
        return AlgVector(self, {self.label_of(t, sign): self.one_scalar for t in transpositions})

    def to_column(self, v: AlgVector) -> List[Scalar]:
        column = [self.zero_scalar] * self.dimension
        for label, value in v.terms():
            column[self._position[label]] = value
        return column

    def from_column(self, column: List[Scalar]) -> AlgVector:
        return AlgVector(self, {self.labels[k]: value for k, value in enumerate(column)})

    def vector_from_json(self, payload: Mapping[str, str]) -> AlgVector:
        by_text = {label.to_json(self.transpositions): label for label in self.labels}
        return AlgVector(
            self, {by_text[key]: parse_scalar(text, self.mode) for key, text in payload.items()}
        )

    # ── structure constants ──────────────────────────────────────────────

    def basis_product(self, a: BasisLabel, b: BasisLabel) -> List[Tuple[BasisLabel, Scalar]]:
        if a.index == b.index:
            return [(a, self.one_scalar)] if a.sign == b.sign else []
        tset = self.transpositions
        if not tset.noncommuting(a.index, b.index):
            return []
        c_d = BasisLabel(tset.conjugate_index(a.index, b.index), a.sign * b.sign)
        return [(a, self.half_alpha), (b, self.half_alpha), (c_d, self._minus_half_alpha)]

    def basis_form(self, a: BasisLabel, b: BasisLabel) -> Scalar:
        if a.index == b.index:
            return self.one_scalar if a.sign == b.sign else self.zero_scalar
        if self.transpositions.noncommuting(a.index, b.index):
            return self.half_alpha
        return self.zero_scalar


def construct_algebra(
    transpositions: TranspositionSet, alpha: Scalar, hat: bool = False
) -> AlgebraSpace:
    """
    Build the (plain or doubled) Matsuo algebra of ``transpositions``.

    Raises
    ------
    InvalidAlphaError
        If alpha is the rational 0 or 1.
    """
    if alpha.mode == FieldMode.RATIONAL and (alpha.is_zero() or alpha.is_one()):
        raise InvalidAlphaError(f"alpha must avoid 0 and 1, got {alpha}")
    space = AlgebraSpace(transpositions, alpha, hat)
    logger.info("Constructed %r of dimension %d", space, space.dimension)
    return space


def multiply(A: AlgebraSpace, u: AlgVector, v: AlgVector) -> AlgVector:
    if u.space is not A or v.space is not A:
        raise ForeignVectorError("multiply() received a vector of another algebra")
    acc: Dict[BasisLabel, Scalar] = {}
    v_terms = v.terms()
    for a, x in u.terms():
        for b, y in v_terms:
            terms = A.basis_product(a, b)
            if not terms:
                continue
            xy = x * y
            for label, k in terms:
                contribution = xy * k
                acc[label] = acc[label] + contribution if label in acc else contribution
    return AlgVector(A, acc)


def gram(A: AlgebraSpace, u: AlgVector, v: AlgVector) -> Scalar:
    if u.space is not A or v.space is not A:
        raise ForeignVectorError("gram() received a vector of another algebra")
    total = A.zero_scalar
    v_terms = v.terms()
    for a, x in u.terms():
        for b, y in v_terms:
            k = A.basis_form(a, b)
            if not k.is_zero():
                total = total + x * y * k
    return total


def adjoint_columns(A: AlgebraSpace, x: AlgVector) -> List[List[Scalar]]:
    """Columns of ad(x): the coordinates of x·e for each basis vector e."""
    return [A.to_column(multiply(A, x, A.basis_vector(label))) for label in A.labels]


def iter_basis(A: AlgebraSpace) -> Iterator[AlgVector]:
    for label in A.labels:
        yield A.basis_vector(label)

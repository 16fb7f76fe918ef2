"""
Exact dense matrices and Gaussian elimination over a Scalar field.

Elimination runs on the raw field values (sympy QQ elements or RatFunc)
and wraps results back into Scalars, so the same code serves both modes.
Pivoting takes the first nonzero entry of each column.
"""

import logging
from typing import List, Optional, Sequence, Tuple

from sympy import QQ
from sympy.polys.rings import PolyElement, ring

from algebra.matsuo import AlgebraSpace, AlgVector
from scalars.errors import AxialError, ScalarModeError
from scalars.field import FieldMode, Scalar

logger = logging.getLogger(__name__)

POLY_T, T = ring("t", QQ)


class SingularMatrixError(AxialError):
    pass


class ExactMatrix:
    """
    Row-major matrix of Scalars sharing one field mode.

    Parameters
    ----------
    rows : Sequence[Sequence[Scalar]]
        Entries; every row must have the same length.
    mode : FieldMode
        Field mode of the entries.
    space : AlgebraSpace, optional
        Algebra whose basis indexes the columns, for operators on an algebra.
    """

    def __init__(
        self,
        rows: Sequence[Sequence[Scalar]],
        mode: FieldMode,
        space: Optional[AlgebraSpace] = None,
    ):
        self.mode = mode
        self.space = space
        self._rows: List[List] = [[entry.value for entry in row] for row in rows]
        self.nrows = len(self._rows)
        self.ncols = len(self._rows[0]) if self._rows else 0

    @classmethod
    def _from_raw(
        cls, raw: List[List], mode: FieldMode, space: Optional[AlgebraSpace] = None
    ) -> "ExactMatrix":
        matrix = cls.__new__(cls)
        matrix.mode = mode
        matrix.space = space
        matrix._rows = raw
        matrix.nrows = len(raw)
        matrix.ncols = len(raw[0]) if raw else 0
        return matrix

    @classmethod
    def identity(cls, n: int, mode: FieldMode) -> "ExactMatrix":
        one, zero = Scalar.one(mode).value, Scalar.zero(mode).value
        return cls._from_raw([[one if i == j else zero for j in range(n)] for i in range(n)], mode)

    @classmethod
    def zeros(cls, nrows: int, ncols: int, mode: FieldMode) -> "ExactMatrix":
        zero = Scalar.zero(mode).value
        return cls._from_raw([[zero] * ncols for _ in range(nrows)], mode)

    @classmethod
    def from_columns(
        cls,
        columns: Sequence[Sequence[Scalar]],
        mode: FieldMode,
        space: Optional[AlgebraSpace] = None,
    ) -> "ExactMatrix":
        if not columns:
            return cls._from_raw([], mode, space)
        nrows = len(columns[0])
        return cls._from_raw(
            [[columns[j][i].value for j in range(len(columns))] for i in range(nrows)], mode, space
        )

    @property
    def dimension(self) -> int:
        return self.nrows

    def __getitem__(self, position: Tuple[int, int]) -> Scalar:
        i, j = position
        return Scalar(self.mode, self._rows[i][j])

    def row(self, i: int) -> List[Scalar]:
        return [Scalar(self.mode, v) for v in self._rows[i]]

    def column(self, j: int) -> List[Scalar]:
        return [Scalar(self.mode, row[j]) for row in self._rows]

    def columns(self) -> List[List[Scalar]]:
        return [self.column(j) for j in range(self.ncols)]

    def raw_rows(self) -> List[List]:
        return [list(row) for row in self._rows]

    def _check(self, other: "ExactMatrix") -> None:
        if other.mode != self.mode:
            raise ScalarModeError("matrices over different fields")

    def __add__(self, other: "ExactMatrix") -> "ExactMatrix":
        self._check(other)
        return ExactMatrix._from_raw(
            [[a + b for a, b in zip(r, s)] for r, s in zip(self._rows, other._rows)], self.mode
        )

    def __sub__(self, other: "ExactMatrix") -> "ExactMatrix":
        self._check(other)
        return ExactMatrix._from_raw(
            [[a - b for a, b in zip(r, s)] for r, s in zip(self._rows, other._rows)], self.mode
        )

    def scaled(self, factor: Scalar) -> "ExactMatrix":
        k = factor.value
        return ExactMatrix._from_raw([[k * a for a in row] for row in self._rows], self.mode)

    def shifted(self, eigenvalue: Scalar) -> "ExactMatrix":
        """M - eigenvalue * I, over the same algebra as M."""
        raw = self.raw_rows()
        for i in range(min(self.nrows, self.ncols)):
            raw[i][i] = raw[i][i] - eigenvalue.value
        return ExactMatrix._from_raw(raw, self.mode, self.space)

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        self._check(other)
        zero = Scalar.zero(self.mode).value
        out = []
        for row in self._rows:
            acc = [zero] * other.ncols
            for k, a in enumerate(row):
                if not a:
                    continue
                for j, b in enumerate(other._rows[k]):
                    if b:
                        acc[j] = acc[j] + a * b
            out.append(acc)
        return ExactMatrix._from_raw(out, self.mode)

    def apply(self, vector: Sequence[Scalar]) -> List[Scalar]:
        zero = Scalar.zero(self.mode).value
        out = []
        raw = [v.value for v in vector]
        for row in self._rows:
            acc = zero
            for a, b in zip(row, raw):
                if a and b:
                    acc = acc + a * b
            out.append(Scalar(self.mode, acc))
        return out

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix._from_raw([list(col) for col in zip(*self._rows)], self.mode)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self.mode == other.mode and self._rows == other._rows

    __hash__ = None

    def is_identity(self) -> bool:
        return self == ExactMatrix.identity(self.nrows, self.mode)

    def __repr__(self) -> str:
        return f"ExactMatrix({self.nrows}x{self.ncols}, {self.mode.value})"


# ──────────────────────────────────────────────────────────────────────────
# Elimination
# ──────────────────────────────────────────────────────────────────────────

def _rref(raw: List[List], ncols: int) -> Tuple[List[List], List[int]]:
    """Reduced row echelon form of ``raw`` (modified in place); returns nonzero rows and pivots."""
    pivots: List[int] = []
    piv_r = 0
    n_rows = len(raw)
    for piv_c in range(ncols):
        for i_row in range(piv_r, n_rows):
            if raw[i_row][piv_c]:
                break
        else:
            continue
        if i_row != piv_r:
            raw[piv_r], raw[i_row] = raw[i_row], raw[piv_r]
        pivot_row = raw[piv_r]
        fp = pivot_row[piv_c]
        pivot_row[:] = [a / fp if a else a for a in pivot_row]
        for r in range(n_rows):
            if r == piv_r:
                continue
            fr = raw[r][piv_c]
            if not fr:
                continue
            target = raw[r]
            for c in range(piv_c, ncols):
                if pivot_row[c]:
                    target[c] = target[c] - fr * pivot_row[c]
        pivots.append(piv_c)
        piv_r += 1
        if piv_r == n_rows:
            break
    return raw[:piv_r], pivots


def rref(M: ExactMatrix) -> Tuple[ExactMatrix, List[int]]:
    rows, pivots = _rref(M.raw_rows(), M.ncols)
    return ExactMatrix._from_raw(rows, M.mode), pivots


def rank(M: ExactMatrix) -> int:
    return len(_rref(M.raw_rows(), M.ncols)[1])


def null_space(M: ExactMatrix) -> List[List[Scalar]]:
    """
    Basis of the null space, one vector per free column in increasing order.

    Each basis vector has a 1 in its free column and zeros in the other
    free columns.
    """
    zero = Scalar.zero(M.mode).value
    one = Scalar.one(M.mode).value
    rows, pivots = _rref(M.raw_rows(), M.ncols)
    pivot_set = set(pivots)
    basis = []
    for free in range(M.ncols):
        if free in pivot_set:
            continue
        vector = [zero] * M.ncols
        vector[free] = one
        for row, p in zip(rows, pivots):
            if row[free]:
                vector[p] = -row[free]
        basis.append([Scalar(M.mode, v) for v in vector])
    return basis


def kernel(M: ExactMatrix) -> List[AlgVector]:
    """
    Null space of an operator on an algebra, as vectors of that algebra.

    Raises
    ------
    ValueError
        If M carries no algebra or its size does not match the algebra.
    """
    if M.space is None:
        raise ValueError("kernel needs a matrix over an algebra basis; use null_space for bare matrices")
    if M.ncols != M.space.dimension:
        raise ValueError(f"{M.ncols} columns for an algebra of dimension {M.space.dimension}")
    return [M.space.from_column(column) for column in null_space(M)]


def solve(M: ExactMatrix, b: Sequence[Scalar]) -> Optional[List[Scalar]]:
    """A solution x of M x = b with free variables set to zero, or None."""
    zero = Scalar.zero(M.mode).value
    augmented = [row + [entry.value] for row, entry in zip(M.raw_rows(), b)]
    rows, pivots = _rref(augmented, M.ncols + 1)
    if pivots and pivots[-1] == M.ncols:
        return None
    solution = [zero] * M.ncols
    for row, p in zip(rows, pivots):
        solution[p] = row[M.ncols]
    return [Scalar(M.mode, v) for v in solution]


def inverse(M: ExactMatrix) -> ExactMatrix:
    n = M.nrows
    one, zero = Scalar.one(M.mode).value, Scalar.zero(M.mode).value
    augmented = [row + [one if i == j else zero for j in range(n)] for i, row in enumerate(M.raw_rows())]
    rows, pivots = _rref(augmented, 2 * n)
    if pivots[:n] != list(range(n)) or len(rows) < n:
        raise SingularMatrixError("matrix is not invertible")
    return ExactMatrix._from_raw([row[n:] for row in rows], M.mode)


def span_rank(vectors: Sequence[Sequence[Scalar]], mode: FieldMode) -> int:
    if not vectors:
        return 0
    raw = [[v.value for v in vector] for vector in vectors]
    return len(_rref(raw, len(raw[0]))[1])


def span_contains(basis: Sequence[Sequence[Scalar]], vectors: Sequence[Sequence[Scalar]], mode: FieldMode) -> bool:
    """True iff every vector lies in the span of ``basis``."""
    if not vectors:
        return True
    return span_rank(list(basis) + list(vectors), mode) == span_rank(basis, mode)


# ──────────────────────────────────────────────────────────────────────────
# Minimal polynomial
# ──────────────────────────────────────────────────────────────────────────

def minimal_polynomial(M: ExactMatrix) -> PolyElement:
    """
    Monic minimal polynomial of ``M`` in QQ[t].

    Powers I, M, M^2, ... are reduced incrementally against an echelon
    basis of the previous ones; the first power that reduces to zero gives
    the relation.
    """
    if M.mode != FieldMode.RATIONAL:
        raise ScalarModeError("minimal polynomials are only computed over the rationals")
    n = M.nrows
    echelon: List[Tuple[int, List, List]] = []  # (pivot, reduced vector, combination)
    power = ExactMatrix.identity(n, M.mode)

    for degree in range(n + 1):
        vector = [a for row in power._rows for a in row]
        combination = [QQ.zero] * degree + [QQ.one]
        for pivot, reduced, combo in echelon:
            factor = vector[pivot]
            if not factor:
                continue
            vector = [a - factor * b if b else a for a, b in zip(vector, reduced)]
            combination = [
                c - factor * (combo[i] if i < len(combo) else QQ.zero)
                for i, c in enumerate(combination)
            ]
        pivot = next((k for k, a in enumerate(vector) if a), None)
        if pivot is None:
            poly = POLY_T.from_dict({(i,): c for i, c in enumerate(combination) if c})
            logger.debug("Minimal polynomial of degree %d found", degree)
            return poly
        lead = vector[pivot]
        echelon.append(
            (pivot, [a / lead for a in vector], [c / lead for c in combination])
        )
        power = power @ M
    raise AssertionError("Cayley-Hamilton bound exceeded")


def rational_roots(poly: PolyElement) -> List[Scalar]:
    """Distinct rational roots of ``poly``, in descending order."""
    if poly.degree() <= 0:
        return []
    _, factors = poly.factor_list()
    roots = []
    for factor, _ in factors:
        if factor.degree() != 1:
            continue
        coeffs = dict(factor.terms())
        roots.append(-coeffs.get((0,), QQ.zero) / coeffs[(1,)])
    return [Scalar(FieldMode.RATIONAL, r) for r in sorted(set(roots), reverse=True)]

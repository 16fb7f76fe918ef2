"""
Tests for exact linear algebra and eigendecompositions.

Covers:
  - ExactMatrix arithmetic, null spaces, algebra kernels, solving, inversion
  - Minimal polynomials and their rational roots
  - Closed-form eigenvalues eta, eta_hat and coset spectra
  - Eigendecomposition of axes, identities and coset axes (both modes)
  - Eigenspace containments between nested identities
  - Dimension cap, degenerate idempotents, missing candidates
"""

from unittest.mock import patch

import pytest
from sympy import QQ

from algebra.idempotents import axis_idempotent, coset_axis, subalgebra_identity
from algebra.matsuo import construct_algebra, multiply
from configs.settings import settings
from roots.root_systems import RootSystemId
from roots.transpositions import build_transposition_set, parabolic_subset
from scalars.field import FieldMode, Scalar, format_scalar
from spectral import closed_forms
from spectral.eigen import (
    CandidatesRequiredError,
    ContainmentError,
    DegenerateIdempotentError,
    DimensionCapError,
    IncompleteDecompositionError,
    ad_matrix,
    check_containments,
    default_candidates,
    eigendecompose,
)
from spectral.matrices import (
    T,
    ExactMatrix,
    SingularMatrixError,
    inverse,
    kernel,
    minimal_polynomial,
    null_space,
    rank,
    rational_roots,
    solve,
    span_contains,
)


# ──────────────────────────────────────────────────────────────────────────
# Shared fixtures
# ──────────────────────────────────────────────────────────────────────────

r = Scalar.rational
QUARTER = r(1, 4)


def mat(rows):
    return ExactMatrix([[r(x) if isinstance(x, int) else x for x in row] for row in rows], FieldMode.RATIONAL)


def algebra(family: str, rank_: int, alpha: Scalar, hat: bool = False):
    return construct_algebra(build_transposition_set(RootSystemId(family, rank_)), alpha, hat)


def identity(A, k):
    return subalgebra_identity(A, parabolic_subset(A.transpositions, range(1, k + 1)))


def coset(A, m, l):
    tset = A.transpositions
    return coset_axis(A, parabolic_subset(tset, range(1, m + 1)), parabolic_subset(tset, range(1, l + 1)))


@pytest.fixture(scope="module")
def a4():
    return algebra("A", 4, QUARTER)


# ──────────────────────────────────────────────────────────────────────────
# Matrices
# ──────────────────────────────────────────────────────────────────────────

class TestExactMatrix:
    """Elimination over the rationals."""

    def test_identity_product(self):
        M = mat([[1, 2], [3, 4]])
        assert ExactMatrix.identity(2, FieldMode.RATIONAL) @ M == M

    def test_inverse(self):
        assert inverse(mat([[2, 1], [1, 1]])) == mat([[1, -1], [-1, 2]])

    def test_singular(self):
        with pytest.raises(SingularMatrixError):
            inverse(mat([[1, 2], [2, 4]]))

    def test_null_space(self):
        basis = null_space(mat([[1, 1], [1, 1]]))
        assert basis == [[r(-1), r(1)]]
        assert rank(mat([[1, 1], [1, 1]])) == 1

    def test_solve(self):
        assert solve(mat([[1, 1], [1, -1]]), [r(3), r(1)]) == [r(2), r(1)]
        assert solve(mat([[1, 1], [1, 1]]), [r(1), r(2)]) is None

    def test_span_contains(self):
        basis = [[r(1), r(0), r(0)], [r(0), r(1), r(0)]]
        assert span_contains(basis, [[r(2), r(-3), r(0)]], FieldMode.RATIONAL)
        assert not span_contains(basis, [[r(0), r(0), r(1)]], FieldMode.RATIONAL)

    def test_symbolic_null_space(self):
        a = Scalar.symbol()
        one = Scalar.one(FieldMode.SYMBOLIC)
        M = ExactMatrix([[a, one], [a * a, a]], FieldMode.SYMBOLIC)
        (v,) = null_space(M)
        assert a * v[0] + v[1] == 0

    def test_kernel_over_algebra(self):
        A = algebra("A", 3, QUARTER)
        x = identity(A, 3)
        basis = kernel(ad_matrix(A, x.vector).shifted(r(3, 10)))
        assert len(basis) == 2
        for v in basis:
            assert multiply(A, x.vector, v) == v.scale(r(3, 10))

    def test_kernel_needs_an_algebra(self):
        with pytest.raises(ValueError):
            kernel(mat([[1, 1], [1, 1]]))

    def test_kernel_of_identity_and_zero(self, a4):
        one, zero = r(1), r(0)
        identity_columns = [[one if i == j else zero for i in range(10)] for j in range(10)]
        assert kernel(ExactMatrix.from_columns(identity_columns, FieldMode.RATIONAL, space=a4)) == []
        zero_columns = [[zero] * 10 for _ in range(10)]
        assert len(kernel(ExactMatrix.from_columns(zero_columns, FieldMode.RATIONAL, space=a4))) == 10


class TestMinimalPolynomial:
    """Krylov minimal polynomial and rational roots."""

    def test_diagonal(self):
        M = mat([[1, 0, 0], [0, 1, 0], [0, 0, 2]])
        assert minimal_polynomial(M) == T**2 - 3 * T + 2

    def test_rational_roots(self):
        assert rational_roots(T**3 - T) == [r(1), r(0), r(-1)]
        assert rational_roots(T**2 - 2) == []

    def test_axis_of_a2(self):
        A = algebra("A", 2, r(1, 3))
        x = axis_idempotent(A, A.transpositions[0])
        poly = minimal_polynomial(ad_matrix(A, x.vector))
        assert poly == T * (T - 1) * (T - QQ(1, 3))


# ──────────────────────────────────────────────────────────────────────────
# Closed forms
# ──────────────────────────────────────────────────────────────────────────

class TestClosedForms:
    """eta, eta_hat and the predicted spectra."""

    def test_eta_values(self):
        assert closed_forms.eta(QUARTER, 4) == r(1, 3)
        assert closed_forms.eta(QUARTER, 5) == r(5, 14)
        assert closed_forms.eta_hat(QUARTER, 5) == r(4, 7)

    def test_eta_symbolic(self):
        assert format_scalar(closed_forms.eta(Scalar.symbol(), 4)) == "(2*a)/(1 + 2*a)"

    def test_coset_eigenvalues(self):
        values = set(closed_forms.coset_eigenvalues(QUARTER, 5, 4))
        assert values == {r(1), r(0), r(5, 14), r(2, 3), r(1, 42)}

    def test_hat_coset_eigenvalues(self):
        values = set(closed_forms.coset_eigenvalues(QUARTER, 5, 4, hat=True))
        assert values == {r(1), r(0), r(5, 14), r(2, 3), r(1, 42), r(5, 21), r(1, 14)}

    def test_dedupe_keeps_first(self):
        assert closed_forms.dedupe([r(1), r(0), r(1)]) == [r(1), r(0)]


# ──────────────────────────────────────────────────────────────────────────
# Eigendecompositions
# ──────────────────────────────────────────────────────────────────────────

class TestEigendecompose:
    """Spectra of idempotents in rational and symbolic mode."""

    def test_identity_spectrum(self, a4):
        dec = eigendecompose(a4, identity(a4, 3))
        assert dec.complete
        assert dec.dims() == {r(1): 3, r(3, 10): 4, r(0): 3}

    def test_coset_spectrum(self, a4):
        dec = eigendecompose(a4, coset(a4, 4, 3))
        assert dec.complete
        assert set(dec.eigenvalues()) == {r(1), r(0), r(1, 3), r(7, 10), r(1, 30)}
        assert set(dec.eigenvalues()) == set(closed_forms.coset_eigenvalues(QUARTER, 4, 3))
        assert dec.eigenvalues() == sorted(dec.eigenvalues(), reverse=True)

    def test_coset_of_full_identity_spectrum(self, a4):
        # id(1..5) is the unit of A_4, so the coset axis is 1 - id(1..4)
        dec = eigendecompose(a4, coset(a4, 5, 4))
        assert dec.complete
        assert set(dec.eigenvalues()) == {r(1), r(0), r(2, 3)}

    def test_doubled_coset_spectrum(self):
        A = algebra("A", 4, QUARTER, hat=True)
        dec = eigendecompose(A, coset(A, 5, 4))
        assert dec.complete
        assert set(dec.eigenvalues()) == set(closed_forms.coset_eigenvalues(QUARTER, 5, 4, hat=True))
        assert sum(dec.dims().values()) == A.dimension == 20

    def test_eigenvectors(self, a4):
        x = coset(a4, 4, 3)
        dec = eigendecompose(a4, x)
        for space in dec.spaces:
            for v in space.basis:
                assert multiply(a4, x.vector, v) == v.scale(space.eigenvalue)

    def test_resolve(self, a4):
        dec = eigendecompose(a4, identity(a4, 4))
        v = a4.axis(a4.transpositions[0]) + a4.axis(a4.transpositions[-1]).scale(r(3))
        parts = dec.resolve(v)
        total = a4.zero()
        for value, component in parts.items():
            total = total + component
            assert multiply(a4, identity(a4, 4).vector, component) == component.scale(value)
        assert total == v

    def test_symbolic_with_candidates(self):
        A = algebra("A", 4, Scalar.symbol())
        x = coset(A, 4, 3)
        dec = eigendecompose(A, x, default_candidates(A, x))
        assert dec.complete
        assert not dec.missing
        assert sum(dec.dims().values()) == 10

    def test_missing_candidate_reported(self, a4):
        dec = eigendecompose(a4, identity(a4, 3), [r(1), r(0), r(1, 2)])
        assert dec.missing == [r(1, 2)]
        assert not dec.complete
        with pytest.raises(IncompleteDecompositionError):
            dec.resolve(a4.axis(a4.transpositions[0]))

    def test_symbolic_needs_candidates(self):
        A = algebra("A", 2, Scalar.symbol())
        with pytest.raises(CandidatesRequiredError):
            eigendecompose(A, identity(A, 3))

    def test_degenerate(self, a4):
        with pytest.raises(DegenerateIdempotentError):
            eigendecompose(a4, subalgebra_identity(a4, []))

    def test_dimension_cap(self, a4):
        with patch.object(settings, "AXIAL_MAX_DIM", 5):
            with pytest.raises(DimensionCapError):
                eigendecompose(a4, identity(a4, 3))

    def test_no_candidates_for_d_type_identities(self):
        A = algebra("D", 4, Scalar.symbol())
        x = subalgebra_identity(A, parabolic_subset(A.transpositions, [1, 2, 3]))
        assert default_candidates(A, x) is None


class TestContainments:
    """Nested identities id_m, id_l."""

    def test_plain(self, a4):
        report = check_containments(a4, identity(a4, 4), identity(a4, 3))
        assert report["commute"]
        assert set(report["containments"]) == {"one", "zero", "eta"}
        assert all(c["holds"] for c in report["containments"].values())

    def test_doubled(self):
        A = algebra("A", 4, QUARTER, hat=True)
        report = check_containments(A, identity(A, 5), identity(A, 4))
        assert report["commute"]
        assert set(report["containments"]) == {"eta_hat"}

    @pytest.mark.parametrize("hat, m", [(False, 4), (True, 5)])
    def test_non_commuting_adjoints_raise(self, hat, m):
        A = algebra("A", 4, QUARTER, hat=hat)
        id_m, id_l = identity(A, m), identity(A, m - 1)
        dec_m, dec_l = eigendecompose(A, id_m), eigendecompose(A, id_l)
        shears = [mat([[1, 1], [0, 1]]), mat([[1, 0], [1, 1]])]
        with patch("spectral.eigen.ad_matrix", side_effect=shears):
            with pytest.raises(ContainmentError):
                check_containments(A, id_m, id_l, dec_m, dec_l)

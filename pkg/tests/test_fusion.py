"""
Tests for fusion tables, gradings and Miyamoto involutions.

Covers:
  - FusionTable construction, equality, containment and JSON form
  - Reference tables for axes, identities and coset axes
  - Empirical tables of eigendecompositions
  - Z/2-grading search
  - Miyamoto involutions and the axial-representation property
"""

import pytest

from algebra.idempotents import axis_idempotent, coset_axis, subalgebra_identity
from algebra.matsuo import construct_algebra
from fusion.gradings import Grading, find_z2_gradings, is_valid_grading, standard_grading
from fusion.miyamoto import (
    InvalidGradingError,
    axis_report,
    check_axial_representation,
    miyamoto_involution,
    primitivity,
)
from fusion.tables import (
    FusionTable,
    associative_table,
    axis_table,
    coset_table,
    fusion_table,
    identity_table,
)
from roots.root_systems import RootSystemId
from roots.transpositions import build_transposition_set, parabolic_subset
from scalars.errors import AxialError
from scalars.field import FieldMode, Scalar
from spectral.eigen import IncompleteDecompositionError, eigendecompose


# ──────────────────────────────────────────────────────────────────────────
# Shared fixtures
# ──────────────────────────────────────────────────────────────────────────

r = Scalar.rational
QUARTER = r(1, 4)
ONE, ZERO = r(1), r(0)


def algebra(family: str, rank: int, alpha: Scalar = QUARTER, hat: bool = False):
    return construct_algebra(build_transposition_set(RootSystemId(family, rank)), alpha, hat)


def points(A, k):
    return parabolic_subset(A.transpositions, range(1, k + 1))


@pytest.fixture(scope="module")
def a3():
    return algebra("A", 3)


@pytest.fixture(scope="module")
def a4():
    return algebra("A", 4)


# ──────────────────────────────────────────────────────────────────────────
# Tables
# ──────────────────────────────────────────────────────────────────────────

class TestFusionTable:
    """Construction, comparison and serialisation."""

    def test_rules_are_symmetric(self):
        table = axis_table(QUARTER)
        assert table.rule(ONE, QUARTER) == table.rule(QUARTER, ONE) == frozenset([QUARTER])
        assert table.rule(ONE, ZERO) == frozenset()

    def test_duplicate_rules_unite(self):
        table = FusionTable([ONE, ZERO], {(ONE, ZERO): [ZERO], (ZERO, ONE): [ONE]})
        assert table.rule(ONE, ZERO) == frozenset([ONE, ZERO])

    def test_unlisted_eigenvalue(self):
        with pytest.raises(ValueError):
            FusionTable([ONE, ZERO], {(ONE, ONE): [QUARTER]})

    def test_json(self):
        assert axis_table(QUARTER).to_json() == {
            "eigenvalues": ["1", "1/4", "0"],
            "rules": {
                "1": {"1": ["1"], "1/4": ["1/4"], "0": []},
                "1/4": {"1/4": ["1", "0"], "0": ["1/4"]},
                "0": {"0": ["0"]},
            },
        }

    def test_json_round_trip(self):
        table = coset_table(r(1, 7), 5, 4)
        assert FusionTable.from_json(table.to_json(), FieldMode.RATIONAL) == table

    def test_symbolic_json_round_trip(self):
        table = coset_table(Scalar.symbol(), 4, 3)
        assert FusionTable.from_json(table.to_json(), FieldMode.SYMBOLIC) == table

    def test_text(self):
        lines = axis_table(QUARTER).to_text().splitlines()
        assert lines[0].startswith("*")
        assert len(lines) == 5
        assert "{1, 0}" in lines[4]

    def test_violations(self):
        loose = FusionTable([ONE, ZERO], {(ONE, ONE): [ONE], (ZERO, ZERO): [ONE, ZERO]})
        problems = loose.violations(associative_table(FieldMode.RATIONAL))
        assert problems == [{"pair": ["0", "0"], "extra": ["1"]}]
        assert not loose.is_contained_in(associative_table(FieldMode.RATIONAL))

    def test_missing_eigenvalue_violation(self):
        problems = axis_table(QUARTER).violations(associative_table(FieldMode.RATIONAL))
        assert problems == [{"eigenvalue": "1/4", "reason": "not in reference"}]

    def test_equality_ignores_order(self):
        a = FusionTable([ONE, ZERO], {(ONE, ONE): [ONE]})
        b = FusionTable([ZERO, ONE], {(ONE, ONE): [ONE]})
        assert a == b


class TestEmpiricalTables:
    """Tables computed from eigendecompositions."""

    def test_axis(self, a3):
        dec = eigendecompose(a3, axis_idempotent(a3, a3.transpositions[0]))
        table = fusion_table(a3, dec)
        assert table.is_contained_in(axis_table(QUARTER))
        assert ONE in table.rule(QUARTER, QUARTER)

    def test_identity(self, a4):
        dec = eigendecompose(a4, subalgebra_identity(a4, points(a4, 3)))
        assert fusion_table(a4, dec).is_contained_in(identity_table(QUARTER, 3))

    def test_coset(self, a4):
        dec = eigendecompose(a4, coset_axis(a4, points(a4, 4), points(a4, 3)))
        table = fusion_table(a4, dec)
        assert not table.violations(coset_table(QUARTER, 4, 3))

    def test_incomplete(self, a4):
        dec = eigendecompose(a4, subalgebra_identity(a4, points(a4, 3)), [ONE, ZERO])
        with pytest.raises(IncompleteDecompositionError):
            fusion_table(a4, dec)


# ──────────────────────────────────────────────────────────────────────────
# Gradings
# ──────────────────────────────────────────────────────────────────────────

class TestGradings:
    """Z/2-gradings of reference tables."""

    def test_axis_table(self):
        gradings = find_z2_gradings(axis_table(QUARTER))
        assert [g.minus for g in gradings] == [frozenset(), frozenset([QUARTER])]
        assert gradings[0].is_trivial

    def test_coset_table_is_ungraded(self):
        gradings = find_z2_gradings(coset_table(QUARTER, 5, 4))
        assert len(gradings) == 1 and gradings[0].is_trivial

    def test_associative_table(self):
        assert len(find_z2_gradings(associative_table(FieldMode.RATIONAL))) == 1

    def test_standard_grading(self):
        g = standard_grading(axis_table(QUARTER), QUARTER)
        assert g.sign(QUARTER) == -1 and g.sign(ONE) == 1
        assert is_valid_grading(axis_table(QUARTER), g)
        assert g.to_json() == {"plus": ["0", "1"], "minus": ["1/4"]}

    def test_standard_grading_without_odd_value(self):
        assert standard_grading(coset_table(QUARTER, 5, 4), QUARTER).is_trivial

    def test_invalid_grading(self):
        g = Grading(frozenset([ONE, QUARTER]), frozenset([ZERO]))
        assert not is_valid_grading(axis_table(QUARTER), g)


# ──────────────────────────────────────────────────────────────────────────
# Miyamoto involutions
# ──────────────────────────────────────────────────────────────────────────

class TestMiyamoto:
    """Involutions of axes and the axial-representation property."""

    def test_axis_report(self, a3):
        report = axis_report(a3, 0)
        assert report["holds"]
        assert report["primitive"]
        assert report["fusion_violations"] == []
        assert report["conjugation_failures"] == []
        # |C(d)| = 1 and |N(d)| = 4 in A3
        assert report["dims"] == {"1": 1, "1/4": 2, "0": 3}

    def test_axis_report_symbolic(self):
        A = algebra("A", 2, Scalar.symbol())
        assert axis_report(A, 1)["holds"]

    def test_axial_representation(self, a3):
        assert check_axial_representation(a3)

    def test_d4_axial_representation(self):
        assert check_axial_representation(algebra("D", 4))

    def test_doubled_algebra_rejected(self):
        with pytest.raises(AxialError):
            check_axial_representation(algebra("A", 2, hat=True))

    def test_trivial_grading_gives_identity(self, a3):
        dec = eigendecompose(a3, axis_idempotent(a3, a3.transpositions[0]))
        table = fusion_table(a3, dec)
        tau = miyamoto_involution(a3, dec, find_z2_gradings(table)[0], table)
        assert tau.matrix.is_identity()

    def test_invalid_grading(self, a3):
        dec = eigendecompose(a3, axis_idempotent(a3, a3.transpositions[0]))
        g = Grading(frozenset([ONE, QUARTER]), frozenset([ZERO]))
        with pytest.raises(InvalidGradingError):
            miyamoto_involution(a3, dec, g)

    def test_primitivity(self, a4):
        axis = eigendecompose(a4, axis_idempotent(a4, a4.transpositions[0]))
        assert primitivity(axis)
        identity = eigendecompose(a4, subalgebra_identity(a4, points(a4, 4)))
        assert not primitivity(identity)

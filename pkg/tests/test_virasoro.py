"""
Tests for minimal models and central-charge curves.

Covers:
  - Central charges, Kac weights and the Kac symmetry
  - Fusion of Kac labels and derived algebra fusion rules
  - Markdown rendering of Kac tables
  - f^A / f^D values, poles and asymptotics
  - Kac weight observations for alpha = 1/4 identities
"""

import pytest

from fusion.tables import FusionTable
from scalars.errors import PoleError
from scalars.field import Scalar
from virasoro.curves import asymptote_check, coset_cc_curve, curve_is_formal, match_kac_observations
from virasoro.minimal_models import (
    InvalidModelError,
    KacLabel,
    KacRangeError,
    MinimalModel,
    central_charge_pq,
    derive_algebra_fusion_rules,
    kac_markdown,
    kac_symmetric_label,
    kac_table,
    kac_weight,
    observed_kac_hits,
    vir_fusion,
)


# ──────────────────────────────────────────────────────────────────────────
# Shared fixtures
# ──────────────────────────────────────────────────────────────────────────

r = Scalar.rational


@pytest.fixture
def m53():
    return MinimalModel(5, 3)


@pytest.fixture
def m54():
    return MinimalModel(5, 4)


# ──────────────────────────────────────────────────────────────────────────
# Minimal models
# ──────────────────────────────────────────────────────────────────────────

class TestMinimalModel:
    """Validation, central charges and Kac weights."""

    @pytest.mark.parametrize("p, q", [(4, 2), (1, 3), (6, 4)])
    def test_invalid(self, p, q):
        with pytest.raises(InvalidModelError):
            MinimalModel(p, q)

    def test_invalid_model_is_value_error(self):
        with pytest.raises(ValueError):
            MinimalModel(4, 2)

    @pytest.mark.parametrize("p, q, c", [(5, 4, r(7, 10)), (4, 3, r(1, 2)), (12, 11, r(21, 22)), (5, 2, r(-22, 5))])
    def test_central_charge(self, p, q, c):
        assert central_charge_pq(MinimalModel(p, q)) == c

    def test_kac_weights(self, m53):
        weights = [kac_weight(m53, KacLabel(r_, 1)) for r_ in range(1, 5)]
        assert weights == [r(0), r(-1, 20), r(1, 5), r(3, 4)]

    def test_out_of_range(self, m53):
        with pytest.raises(KacRangeError):
            kac_weight(m53, KacLabel(5, 1))
        with pytest.raises(KacRangeError):
            kac_weight(m53, KacLabel(1, 0))

    def test_symmetry(self, m53):
        for r_ in range(1, 5):
            for s in range(1, 3):
                mirror = KacLabel(5 - r_, 3 - s)
                assert kac_weight(m53, KacLabel(r_, s)) == kac_weight(m53, mirror)
        assert kac_symmetric_label(m53, KacLabel(4, 2)) == KacLabel(1, 1)

    def test_table_shape(self, m53):
        table = kac_table(m53)
        assert len(table) == 2 and all(len(row) == 4 for row in table)
        assert kac_table(m53, halved=True)[0] == [r(0), r(-1, 40), r(1, 10), r(3, 8)]

    def test_markdown(self, m54):
        lines = kac_markdown(m54).splitlines()
        assert lines[0] == "c(5,4) = 7/10"
        assert lines[2] == "| h | r=1 | r=2 | r=3 | r=4 |"
        assert lines[4].startswith("| s=1 | 0 |")
        assert len(lines) == 7

    def test_markdown_halved(self, m53):
        assert "| h/2 |" in kac_markdown(m53, halved=True)


class TestFusion:
    """Fusion of Kac labels and the derived algebra rules."""

    def test_vir_fusion(self, m54):
        assert vir_fusion(m54, KacLabel(2, 1), KacLabel(2, 1)) == {KacLabel(1, 1), KacLabel(3, 1)}

    def test_identity_label_is_neutral(self, m54):
        for label in (KacLabel(2, 1), KacLabel(3, 2), KacLabel(1, 3)):
            assert vir_fusion(m54, KacLabel(1, 1), label) == {label}

    def test_vir_fusion_range(self, m54):
        with pytest.raises(KacRangeError):
            vir_fusion(m54, KacLabel(1, 1), KacLabel(5, 1))

    def test_derived_53_table(self, m53):
        one, zero, a, b, c = r(1), r(0), r(1, 10), r(-1, 40), r(3, 8)
        table = derive_algebra_fusion_rules(m53)
        assert set(table.eigenvalues) == {one, zero, a, b, c}
        assert table.rule(zero, zero) == {zero}
        assert table.rule(one, zero) == frozenset()
        assert table.rule(a, a) == {one, zero, a}
        assert table.rule(a, b) == {b, c}
        assert table.rule(a, c) == {b}
        assert table.rule(b, b) == {one, zero, a}
        assert table.rule(b, c) == {a}
        assert table.rule(c, c) == {one, zero}

    def test_derived_53_matches_printed_table(self, m53):
        one, zero, a, b, c = r(1), r(0), r(1, 10), r(-1, 40), r(3, 8)
        printed = FusionTable(
            [one, zero, a, b, c],
            {
                (one, one): [one], (one, a): [a], (one, b): [b], (one, c): [c],
                (zero, zero): [zero], (zero, a): [a], (zero, b): [b], (zero, c): [c],
                (a, a): [one, zero, a], (a, b): [b, c], (a, c): [b],
                (b, b): [one, zero, a], (b, c): [a],
                (c, c): [one, zero],
            },
        )
        derived = derive_algebra_fusion_rules(m53)
        assert derived == printed
        assert derived.to_json()["rules"]["0"] == {"0": ["0"], "-1/40": ["-1/40"]}

    def test_derived_json_order(self, m53):
        payload = derive_algebra_fusion_rules(m53).to_json()
        assert payload["eigenvalues"] == ["1", "3/8", "1/10", "0", "-1/40"]
        assert payload["rules"]["1/10"]["-1/40"] == ["3/8", "-1/40"]

    def test_observed_hits(self, m53):
        hits = observed_kac_hits([r(1, 10), r(7, 3), Scalar.symbol()], m53)
        assert hits == [
            {"eigenvalue": "1/10", "labels": [[2, 2], [3, 1]]},
            {"eigenvalue": "7/3", "labels": []},
        ]


# ──────────────────────────────────────────────────────────────────────────
# Curves
# ──────────────────────────────────────────────────────────────────────────

class TestCurves:
    """Central-charge curves of nested cosets."""

    def test_quarter_values(self):
        assert coset_cc_curve("A", r(1, 4), 4) == r(6, 7)
        assert coset_cc_curve("D", r(1, 4), 5) == r(1)

    def test_thirty_second(self):
        assert coset_cc_curve("A", r(1, 32), 2) == r(21, 22)

    def test_symbolic_value_at_one(self):
        assert coset_cc_curve("A", Scalar.symbol(), 1) * 2 == 1

    def test_pole(self):
        with pytest.raises(PoleError):
            coset_cc_curve("A", r(1, 2), 0)

    def test_unknown_family(self):
        with pytest.raises(ValueError):
            coset_cc_curve("E", r(1, 4), 3)

    def test_asymptote_a(self):
        report = asymptote_check("A")
        assert report["limit_holds"]
        assert report["value_at_one_is_half"]
        assert report["numerator_degree"] == report["denominator_degree"] == 2

    def test_asymptote_d(self):
        report = asymptote_check("D")
        assert report["limit_holds"]
        assert report["value_at_one"] == "0"
        assert not report["value_at_one_is_half"]

    def test_formal_values(self):
        assert curve_is_formal("D", 4)
        assert not curve_is_formal("D", 5)
        assert not curve_is_formal("A", 2)


class TestKacObservations:
    """Eigenvalues of alpha = 1/4 identities against halved Kac weights."""

    def test_m2(self):
        report = match_kac_observations(2)
        assert report["model"] == [5, 4]
        assert report["holds"]
        statuses = {c["name"]: c["status"] for c in report["checks"]}
        assert statuses == {
            "zero": "pass",
            "eta": "pass",
            "one_minus_eta": "pass",
            "eta_difference": "pass",
            "hat_eta_minus_eta": "skipped",
            "hat_eta_difference": "skipped",
        }

    @pytest.mark.parametrize("m", range(3, 9))
    def test_larger_m(self, m):
        assert match_kac_observations(m)["holds"]

    def test_m_too_small(self):
        with pytest.raises(ValueError):
            match_kac_observations(1)

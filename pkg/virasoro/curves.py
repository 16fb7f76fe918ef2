"""
Central-charge curves of nested coset axes and their matches with Kac weights.

    f^A(m) = m (2 + a (m - 3)) / (4 (1 + a (m - 1)) (1 + a (m - 2)))
    f^D(m) = (m - 1)(1 + a (m - 4)) / ((1 + a (2m - 4)) (1 + a (2m - 6)))
"""

import logging
from typing import Dict, List, Tuple

from scalars.errors import PoleError
from scalars.field import FieldMode, Scalar, format_scalar
from spectral.closed_forms import eta, eta_hat
from virasoro.minimal_models import KacLabel, MinimalModel, in_range, kac_weight

logger = logging.getLogger(__name__)

FAMILIES = ("A", "D")

# A polynomial in m with Scalar coefficients, lowest degree first.
MPoly = List[Scalar]


def _curve_parts(family: str, alpha: Scalar) -> Tuple[List[MPoly], List[MPoly]]:
    """Numerator and denominator of the curve as products of linear factors in m."""
    one = Scalar.one(alpha.mode)
    zero = Scalar.zero(alpha.mode)
    if family == "A":
        numerator = [[zero, one], [2 - 3 * alpha, alpha]]
        denominator = [[Scalar.constant(alpha.mode, 4)], [1 - alpha, alpha], [1 - 2 * alpha, alpha]]
    elif family == "D":
        numerator = [[-one, one], [1 - 4 * alpha, alpha]]
        denominator = [[1 - 4 * alpha, 2 * alpha], [1 - 6 * alpha, 2 * alpha]]
    else:
        raise ValueError(f"curve family must be one of {FAMILIES}, got {family!r}")
    return numerator, denominator


def _mul(f: MPoly, g: MPoly) -> MPoly:
    zero = f[0] - f[0]
    out = [zero] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        for j, b in enumerate(g):
            out[i + j] = out[i + j] + a * b
    return out


def _product(factors: List[MPoly]) -> MPoly:
    result = factors[0]
    for factor in factors[1:]:
        result = _mul(result, factor)
    while len(result) > 1 and result[-1].is_zero():
        result.pop()
    return result


def _evaluate(f: MPoly, m: int) -> Scalar:
    total = f[0] - f[0]
    for c in reversed(f):
        total = total * m + c
    return total


def coset_cc_curve(family: str, alpha: Scalar, m: int) -> Scalar:
    """
    Value of f^A or f^D at ``m``.

    Raises
    ------
    PoleError
        If the denominator vanishes for this alpha and m.
    """
    numerator, denominator = _curve_parts(family, alpha)
    den = _evaluate(_product(denominator), m)
    if den.is_zero():
        raise PoleError(f"f^{family} has a pole at m={m} for alpha={format_scalar(alpha)}")
    return _evaluate(_product(numerator), m) / den


def curve_is_formal(family: str, m: int) -> bool:
    """f^D is only a central charge of a coset for m > 4; smaller m are formal values."""
    return family == "D" and m <= 4


def asymptote_check(family: str) -> Dict[str, object]:
    """
    Leading behaviour of the curve in m over Q(alpha), and its value at m = 1.
    """
    alpha = Scalar.symbol()
    numerator, denominator = _curve_parts(family, alpha)
    num = _product(numerator)
    den = _product(denominator)
    ratio = num[-1] / den[-1]
    expected = 1 / (4 * alpha)
    at_one = coset_cc_curve(family, alpha, 1)
    half = Scalar.constant(FieldMode.SYMBOLIC, 1, 2)

    report = {
        "family": family,
        "numerator_degree": len(num) - 1,
        "denominator_degree": len(den) - 1,
        "leading_ratio": format_scalar(ratio),
        "expected_limit": format_scalar(expected),
        "limit_holds": len(num) == len(den) and ratio == expected,
        "value_at_one": format_scalar(at_one),
        "value_at_one_is_half": at_one == half,
    }
    if not report["value_at_one_is_half"]:
        logger.warning("f^%s(1) = %s, not 1/2", family, report["value_at_one"])
    return report


# ──────────────────────────────────────────────────────────────────────────
# Kac weight observations at alpha = 1/4
# ──────────────────────────────────────────────────────────────────────────

def _observations(m: int) -> List[Tuple[str, Scalar, KacLabel]]:
    alpha = Scalar.rational(1, 4)
    one = Scalar.one(FieldMode.RATIONAL)
    return [
        ("zero", Scalar.zero(FieldMode.RATIONAL), KacLabel(1, 1)),
        ("eta", eta(alpha, m + 1), KacLabel(3, 1)),
        ("one_minus_eta", one - eta(alpha, m), KacLabel(1, 3)),
        ("eta_difference", eta(alpha, m + 1) - eta(alpha, m), KacLabel(3, 3)),
        ("hat_eta_minus_eta", eta_hat(alpha, m + 1) - eta(alpha, m), KacLabel(5, 3)),
        ("hat_eta_difference", eta_hat(alpha, m + 1) - eta_hat(alpha, m), KacLabel(5, 5)),
    ]


def match_kac_observations(m: int) -> Dict[str, object]:
    """
    Compare eigenvalues of the alpha = 1/4 identities with halved Kac
    weights of the model (m + 3, m + 2). Labels outside the Kac table are
    skipped.
    """
    if m < 2:
        raise ValueError("Kac observations start at m = 2")
    model = MinimalModel(m + 3, m + 2)
    half = Scalar.rational(1, 2)
    checks = []
    for name, value, label in _observations(m):
        entry: Dict[str, object] = {"name": name, "label": label.to_json()}
        if not in_range(model, label):
            entry.update({"status": "skipped", "note": f"label {label} outside the Kac table of {model}"})
        else:
            weight = kac_weight(model, label) * half
            entry.update({
                "status": "pass" if weight == value else "fail",
                "eigenvalue": format_scalar(value),
                "half_weight": format_scalar(weight),
            })
        checks.append(entry)
    return {
        "m": m,
        "model": [model.p, model.q],
        "checks": checks,
        "holds": all(c["status"] != "fail" for c in checks),
    }

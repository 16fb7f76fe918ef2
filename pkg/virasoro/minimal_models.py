"""
Virasoro minimal models: central charges, Kac weights, fusion of Kac
labels and the fusion rules an algebra inherits from them by halving
weights.
"""

import logging
from dataclasses import dataclass
from math import gcd
from typing import Dict, FrozenSet, Iterable, List, Set, Tuple

from fusion.tables import FusionTable
from scalars.errors import AxialError
from scalars.field import FieldMode, Scalar, format_scalar
from spectral.closed_forms import dedupe

logger = logging.getLogger(__name__)


class InvalidModelError(AxialError, ValueError):
    pass


class KacRangeError(AxialError, ValueError):
    pass


@dataclass(frozen=True)
class MinimalModel:
    """Coprime pair p, q >= 2 labelling the minimal model of central charge c(p, q)."""

    p: int
    q: int

    def __post_init__(self):
        if self.p < 2 or self.q < 2:
            raise InvalidModelError(f"({self.p}, {self.q}): p and q must be at least 2")
        if gcd(self.p, self.q) != 1:
            raise InvalidModelError(f"({self.p}, {self.q}) are not coprime")

    def __str__(self) -> str:
        return f"({self.p},{self.q})"


@dataclass(frozen=True, order=True)
class KacLabel:
    r: int
    s: int

    def to_json(self) -> List[int]:
        return [self.r, self.s]

    def __str__(self) -> str:
        return f"({self.r},{self.s})"


def in_range(model: MinimalModel, label: KacLabel) -> bool:
    return 1 <= label.r < model.p and 1 <= label.s < model.q


def check_label(model: MinimalModel, label: KacLabel) -> None:
    if not in_range(model, label):
        raise KacRangeError(f"label {label} outside 1 <= r < {model.p}, 1 <= s < {model.q}")


def kac_labels(model: MinimalModel) -> List[KacLabel]:
    """All labels, r-major."""
    return [KacLabel(r, s) for r in range(1, model.p) for s in range(1, model.q)]


def kac_symmetric_label(model: MinimalModel, label: KacLabel) -> KacLabel:
    """Smaller of (r, s) and (p - r, q - s); both carry the same weight."""
    check_label(model, label)
    return min(label, KacLabel(model.p - label.r, model.q - label.s))


def central_charge_pq(model: MinimalModel) -> Scalar:
    """1 - 6 (p - q)^2 / (p q)."""
    p, q = model.p, model.q
    return Scalar.rational(p * q - 6 * (p - q) ** 2, p * q)


def kac_weight(model: MinimalModel, label: KacLabel) -> Scalar:
    """
    Conformal weight ((s p - r q)^2 - (p - q)^2) / (4 p q).

    Raises
    ------
    KacRangeError
        If the label lies outside the Kac table.
    """
    check_label(model, label)
    p, q = model.p, model.q
    return Scalar.rational((label.s * p - label.r * q) ** 2 - (p - q) ** 2, 4 * p * q)


def _fusion_range(a: int, b: int, bound: int) -> List[int]:
    low = 1 + abs(a - b)
    high = min(a + b - 1, 2 * bound - a - b - 1)
    return [v for v in range(low, high + 1) if (v - (1 + a + b)) % 2 == 0]


def vir_fusion(model: MinimalModel, a: KacLabel, b: KacLabel) -> FrozenSet[KacLabel]:
    """Labels (v, w) occurring in the fusion product of ``a`` and ``b``."""
    check_label(model, a)
    check_label(model, b)
    return frozenset(
        KacLabel(v, w)
        for v in _fusion_range(a.r, b.r, model.p)
        for w in _fusion_range(a.s, b.s, model.q)
    )


def kac_table(model: MinimalModel, halved: bool = False) -> List[List[Scalar]]:
    """Weights h_{r,s} as rows s = 1..q-1 and columns r = 1..p-1."""
    factor = Scalar.rational(1, 2) if halved else Scalar.one(FieldMode.RATIONAL)
    return [
        [kac_weight(model, KacLabel(r, s)) * factor for r in range(1, model.p)]
        for s in range(1, model.q)
    ]


def kac_markdown(model: MinimalModel, halved: bool = False) -> str:
    title = "h/2" if halved else "h"
    lines = [
        f"c{model} = {format_scalar(central_charge_pq(model))}",
        "",
        f"| {title} | " + " | ".join(f"r={r}" for r in range(1, model.p)) + " |",
        "|---" * model.p + "|",
    ]
    for s, row in enumerate(kac_table(model, halved), start=1):
        lines.append(f"| s={s} | " + " | ".join(format_scalar(h) for h in row) + " |")
    return "\n".join(lines)


def derive_algebra_fusion_rules(model: MinimalModel) -> FusionTable:
    """
    Fusion rules on the halved weights h/2 together with 1.

    The entry of two halved weights collects the halved weights of every
    fusion product over all labels carrying them; 1 joins every entry that
    contains 0 except 0*0, which stays {0}. The extra eigenvalue 1 obeys
    1*1 = {1}, 1*0 = {} and 1*x = {x} otherwise.
    """
    one = Scalar.one(FieldMode.RATIONAL)
    zero = Scalar.zero(FieldMode.RATIONAL)
    half = Scalar.rational(1, 2)

    by_value: Dict[Scalar, List[KacLabel]] = {}
    for label in kac_labels(model):
        by_value.setdefault(kac_weight(model, label) * half, []).append(label)
    halved = dedupe(by_value)

    rules: Dict[Tuple[Scalar, Scalar], Set[Scalar]] = {(one, one): {one}}
    for value in halved:
        if value != zero:
            rules[(one, value)] = {value}

    for i, x in enumerate(halved):
        for y in halved[i:]:
            entry: Set[Scalar] = set()
            for a in by_value[x]:
                for b in by_value[y]:
                    entry.update(kac_weight(model, c) * half for c in vir_fusion(model, a, b))
            if zero in entry and not (x == zero and y == zero):
                entry.add(one)
            rules[(x, y)] = entry

    table = FusionTable([one] + halved, rules, name=f"V{model}")
    logger.debug("Derived fusion rules of %s on %d eigenvalues", model, len(table.eigenvalues))
    return table


def observed_kac_hits(eigenvalues: Iterable[Scalar], model: MinimalModel) -> List[Dict[str, object]]:
    """For each rational eigenvalue, the labels whose halved weight equals it."""
    half = Scalar.rational(1, 2)
    weights = {label: kac_weight(model, label) * half for label in kac_labels(model)}
    hits = []
    for value in eigenvalues:
        if not value.is_rational_constant():
            continue
        value = value.to_rational()
        labels = [label.to_json() for label, w in weights.items() if w == value]
        hits.append({"eigenvalue": format_scalar(value), "labels": labels})
    return hits

"""
Z/2-gradings of fusion tables.
"""

import itertools
from dataclasses import dataclass
from typing import Dict, FrozenSet, List

from fusion.tables import FusionTable
from scalars.field import Scalar, format_scalar


@dataclass(frozen=True)
class Grading:
    plus: FrozenSet[Scalar]
    minus: FrozenSet[Scalar]

    @property
    def is_trivial(self) -> bool:
        return not self.minus

    def sign(self, eigenvalue: Scalar) -> int:
        return -1 if eigenvalue in self.minus else 1

    def to_json(self) -> Dict[str, List[str]]:
        return {
            "plus": sorted(format_scalar(v) for v in self.plus),
            "minus": sorted(format_scalar(v) for v in self.minus),
        }


def standard_grading(table: FusionTable, odd: Scalar) -> Grading:
    """Grading with ``odd`` alone in the minus part (empty when ``odd`` is absent)."""
    minus = frozenset(v for v in table.eigenvalues if v == odd)
    return Grading(frozenset(table.eigenvalues) - minus, minus)


def is_valid_grading(table: FusionTable, grading: Grading) -> bool:
    """lambda * mu must lie in the part of sign sign(lambda) sign(mu)."""
    if grading.plus & grading.minus or (grading.plus | grading.minus) != set(table.eigenvalues):
        return False
    for a, b in table.pairs():
        target = grading.minus if grading.sign(a) * grading.sign(b) < 0 else grading.plus
        if not table.rule(a, b) <= target:
            return False
    return True


def find_z2_gradings(table: FusionTable) -> List[Grading]:
    """
    All valid gradings, trivial first, then by size of the minus part.

    The eigenvalue 1 stays even whenever 1 * 1 contains 1.
    """
    values = list(table.eigenvalues)
    one = Scalar.one(table.mode)
    free = [v for v in values if not (v == one and one in table.rule(one, one))]

    gradings = []
    for size in range(len(free) + 1):
        for minus in itertools.combinations(free, size):
            grading = Grading(frozenset(v for v in values if v not in minus), frozenset(minus))
            if is_valid_grading(table, grading):
                gradings.append(grading)
    return gradings

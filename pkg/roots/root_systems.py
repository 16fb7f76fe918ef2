"""
Simply-laced root systems in their standard integer realisations.

A_n lives in Z^{n+1}, D_n in Z^n. E-type roots use doubled E8 coordinates
(every coordinate an integer) and report ``coordinate_scale = 2`` so that
inner products can be divided back by 4.
"""

import itertools
from dataclasses import dataclass
from typing import List, Tuple

from scalars.errors import AxialError

Root = Tuple[int, ...]

FAMILIES = ("A", "D", "E")
E_COXETER = {6: 12, 7: 18, 8: 30}


class InvalidRootSystemError(AxialError, ValueError):
    pass


@dataclass(frozen=True)
class RootSystemId:
    """
    Family letter plus rank of a simply-laced root system.

    Parameters
    ----------
    family : str
        One of "A", "D", "E".
    rank : int
        n >= 1 for A, n >= 4 for D, n in {6, 7, 8} for E.
    """

    family: str
    rank: int

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise InvalidRootSystemError(f"unknown family {self.family!r}")
        if self.family == "A" and self.rank < 1:
            raise InvalidRootSystemError("A_n needs n >= 1")
        if self.family == "D" and self.rank < 4:
            raise InvalidRootSystemError("D_n needs n >= 4")
        if self.family == "E" and self.rank not in E_COXETER:
            raise InvalidRootSystemError("E_n needs n in {6, 7, 8}")

    @property
    def coxeter_number(self) -> int:
        if self.family == "A":
            return self.rank + 1
        if self.family == "D":
            return 2 * self.rank - 2
        return E_COXETER[self.rank]

    @property
    def coordinate_scale(self) -> int:
        return 2 if self.family == "E" else 1

    @property
    def ambient_dimension(self) -> int:
        if self.family == "A":
            return self.rank + 1
        if self.family == "D":
            return self.rank
        return 8

    @property
    def positive_root_count(self) -> int:
        return self.rank * self.coxeter_number // 2

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"


def normalise(root: Root) -> Root:
    """Negate ``root`` if its first nonzero coordinate is negative."""
    for coordinate in root:
        if coordinate != 0:
            return root if coordinate > 0 else tuple(-c for c in root)
    raise ValueError("the zero vector is not a root")


def _unit_pair(dim: int, i: int, j: int, si: int, sj: int, scale: int = 1) -> Root:
    vector = [0] * dim
    vector[i] = si * scale
    vector[j] = sj * scale
    return tuple(vector)


def _type_a(rank: int) -> List[Root]:
    dim = rank + 1
    return [_unit_pair(dim, i, j, 1, -1) for i, j in itertools.combinations(range(dim), 2)]


def _type_d(rank: int) -> List[Root]:
    roots = []
    for i, j in itertools.combinations(range(rank), 2):
        roots.append(_unit_pair(rank, i, j, 1, -1))
        roots.append(_unit_pair(rank, i, j, 1, 1))
    return roots


def _e8_doubled() -> List[Root]:
    roots = set()
    for i, j in itertools.combinations(range(8), 2):
        for si, sj in itertools.product((1, -1), repeat=2):
            roots.add(normalise(_unit_pair(8, i, j, si, sj, scale=2)))
    for signs in itertools.product((1, -1), repeat=8):
        if signs.count(-1) % 2 == 0:
            roots.add(normalise(signs))
    return list(roots)


def _type_e(rank: int) -> List[Root]:
    roots = _e8_doubled()
    # E7 is orthogonal to e7+e8, E6 additionally to e6+e8.
    if rank <= 7:
        roots = [r for r in roots if r[6] + r[7] == 0]
    if rank == 6:
        roots = [r for r in roots if r[5] + r[7] == 0]
    return roots


def positive_roots(system: RootSystemId) -> List[Root]:
    """All positive roots of ``system`` in ascending lexicographic order."""
    if system.family == "A":
        roots = _type_a(system.rank)
    elif system.family == "D":
        roots = _type_d(system.rank)
    else:
        roots = _type_e(system.rank)
    return sorted(normalise(r) for r in roots)

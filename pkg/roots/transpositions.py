"""
Transposition sets (G, D) of simply-laced Weyl groups.

D is realised as the positive roots: the reflections s_c, s_d commute iff
c·d = 0, and otherwise generate Sym(3) with c^d the normalised reflection
of c in d.
"""

import logging
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, Iterator, List, Sequence, Tuple

from roots.root_systems import Root, RootSystemId, normalise, positive_roots
from scalars.errors import AxialError

logger = logging.getLogger(__name__)


class NonRegularError(AxialError):
    """The noncommuting graph on a subset is not regular."""
    pass


@dataclass(frozen=True, order=True)
class Transposition:
    """
    A reflection, stored as its positive root.

    ``scale`` is the coordinate scale of the realisation (2 for E-type
    doubled coordinates) so that ``dot`` returns the true inner product.
    """

    root: Root
    scale: int = 1

    def dot(self, other: "Transposition") -> int:
        raw = sum(a * b for a, b in zip(self.root, other.root))
        return raw // (self.scale * self.scale)

    @property
    def support(self) -> FrozenSet[int]:
        """1-based coordinate indices where the root is nonzero."""
        return frozenset(i + 1 for i, c in enumerate(self.root) if c != 0)

    def to_json(self) -> str:
        return "[" + ",".join(str(c) for c in self.root) + "]"

    def __str__(self) -> str:
        return self.to_json()


def commutes(c: Transposition, d: Transposition) -> bool:
    return c.dot(d) == 0


def conjugate(c: Transposition, d: Transposition) -> Transposition:
    """c^d: the reflection of c in d, renormalised to a positive root."""
    product = c.dot(d)
    if product == 0:
        return c
    scale = c.scale
    reflected = tuple(a - product * b for a, b in zip(c.root, d.root))
    return Transposition(normalise(reflected), scale)


class TranspositionSet:
    """
    The positive roots of one root system with cached pairwise data.

    Parameters
    ----------
    system : RootSystemId
        Which root system to realise.
    """

    def __init__(self, system: RootSystemId):
        self.id = system
        scale = system.coordinate_scale
        self.roots: Tuple[Transposition, ...] = tuple(
            Transposition(r, scale) for r in positive_roots(system)
        )
        self._index: Dict[Transposition, int] = {t: i for i, t in enumerate(self.roots)}

        n = len(self.roots)
        self._inner: List[List[int]] = [
            [self.roots[i].dot(self.roots[j]) for j in range(n)] for i in range(n)
        ]
        self._conjugate: List[List[int]] = [
            [self._index[conjugate(self.roots[i], self.roots[j])] for j in range(n)]
            for i in range(n)
        ]
        self.adjacency: Tuple[FrozenSet[int], ...] = tuple(
            frozenset(j for j in range(n) if j != i and self._inner[i][j] != 0)
            for i in range(n)
        )

    def __len__(self) -> int:
        return len(self.roots)

    def __iter__(self) -> Iterator[Transposition]:
        return iter(self.roots)

    def __getitem__(self, i: int) -> Transposition:
        return self.roots[i]

    def index_of(self, t: Transposition) -> int:
        return self._index[t]

    def __contains__(self, t: Transposition) -> bool:
        return t in self._index

    def inner(self, i: int, j: int) -> int:
        return self._inner[i][j]

    def conjugate_index(self, i: int, j: int) -> int:
        """Index of roots[i]^roots[j]."""
        return self._conjugate[i][j]

    def noncommuting(self, i: int, j: int) -> bool:
        return j in self.adjacency[i]

    def neighbours(self, i: int) -> FrozenSet[int]:
        """N(d): indices of transpositions not commuting with roots[i]."""
        return self.adjacency[i]

    def commuting(self, i: int) -> FrozenSet[int]:
        """C(d): indices of transpositions commuting with roots[i], excluding i."""
        return frozenset(range(len(self))) - self.adjacency[i] - {i}

    def indices(self, subset: Iterable[Transposition]) -> List[int]:
        return sorted(self._index[t] for t in subset)


def build_transposition_set(system: RootSystemId) -> TranspositionSet:
    tset = TranspositionSet(system)
    degrees = {len(a) for a in tset.adjacency}
    logger.info(
        "Built %s: %d transpositions, noncommuting degrees %s",
        system, len(tset), sorted(degrees),
    )
    return tset


def parabolic_subset(tset: TranspositionSet, support: Iterable[int]) -> List[Transposition]:
    """Roots whose nonzero coordinates all lie in ``support`` (1-based indices)."""
    allowed = frozenset(support)
    return [t for t in tset.roots if t.support <= allowed]


def regularity_degree(subset: Sequence[Transposition]) -> int:
    """
    Common number of noncommuting partners inside ``subset``.

    Raises
    ------
    NonRegularError
        If degrees differ or the subset is empty.
    """
    if not subset:
        raise NonRegularError("regularity of the empty subset is undefined")
    degrees = set()
    for c in subset:
        degrees.add(sum(1 for d in subset if d != c and not commutes(c, d)))
    if len(degrees) != 1:
        raise NonRegularError(f"noncommuting degrees {sorted(degrees)} are not constant")
    return degrees.pop()


def is_conjugation_closed(subset: Sequence[Transposition]) -> bool:
    members = set(subset)
    return all(conjugate(c, d) in members for c in subset for d in subset)

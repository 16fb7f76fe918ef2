"""
Fusion tables: reference rule sets and empirical tables of eigendecompositions.
"""

import logging
from typing import Dict, FrozenSet, Iterable, List, Mapping, Tuple

from algebra.matsuo import AlgebraSpace, multiply
from scalars.field import FieldMode, Scalar, format_scalar, parse_scalar
from spectral import closed_forms
from spectral.eigen import Eigendecomposition, IncompleteDecompositionError

logger = logging.getLogger(__name__)

Rule = FrozenSet[Scalar]


class FusionTable:
    """
    A symmetric map (lambda, mu) -> set of eigenvalues.

    Parameters
    ----------
    eigenvalues : Iterable[Scalar]
        The eigenvalue set, in display order.
    rules : Mapping[Tuple[Scalar, Scalar], Iterable[Scalar]]
        Entries for unordered pairs; missing pairs are empty. Rules given
        for both orders of a pair, or for coinciding eigenvalues, are united.
    name : str
        Label used in reports.
    """

    def __init__(
        self,
        eigenvalues: Iterable[Scalar],
        rules: Mapping[Tuple[Scalar, Scalar], Iterable[Scalar]],
        name: str = "",
    ):
        self.eigenvalues: List[Scalar] = closed_forms.dedupe(eigenvalues)
        self.name = name
        self._position = {value: k for k, value in enumerate(self.eigenvalues)}
        self._entries: Dict[Tuple[int, int], set] = {}
        for (a, b), values in rules.items():
            key = self._key(a, b)
            members = set(values)
            unknown = [v for v in members if v not in self._position]
            if unknown:
                raise ValueError(f"rule {a}*{b} mentions unlisted eigenvalues {unknown}")
            self._entries.setdefault(key, set()).update(members)

    def _key(self, a: Scalar, b: Scalar) -> Tuple[int, int]:
        i, j = self._position[a], self._position[b]
        return (i, j) if i <= j else (j, i)

    @property
    def mode(self) -> FieldMode:
        return self.eigenvalues[0].mode

    def rule(self, a: Scalar, b: Scalar) -> Rule:
        return frozenset(self._entries.get(self._key(a, b), ()))

    def pairs(self) -> List[Tuple[Scalar, Scalar]]:
        n = len(self.eigenvalues)
        return [(self.eigenvalues[i], self.eigenvalues[j]) for i in range(n) for j in range(i, n)]

    def __contains__(self, value: Scalar) -> bool:
        return value in self._position

    def __eq__(self, other) -> bool:
        if not isinstance(other, FusionTable):
            return NotImplemented
        if set(self.eigenvalues) != set(other.eigenvalues):
            return False
        return all(self.rule(a, b) == other.rule(a, b) for a, b in self.pairs())

    __hash__ = None

    def violations(self, reference: "FusionTable") -> List[Dict[str, object]]:
        """Entries of this table not contained in ``reference``; empty means contained."""
        problems = []
        for value in self.eigenvalues:
            if value not in reference:
                problems.append({"eigenvalue": format_scalar(value), "reason": "not in reference"})
        if problems:
            return problems
        for a, b in self.pairs():
            extra = self.rule(a, b) - reference.rule(a, b)
            if extra:
                problems.append({
                    "pair": [format_scalar(a), format_scalar(b)],
                    "extra": self._ordered(extra),
                })
        return problems

    def is_contained_in(self, reference: "FusionTable") -> bool:
        return not self.violations(reference)

    # ── serialisation ────────────────────────────────────────────────────

    def _canonical_order(self) -> List[Scalar]:
        if self.mode == FieldMode.RATIONAL:
            return sorted(self.eigenvalues, reverse=True)
        return list(self.eigenvalues)

    def _ordered(self, values: Iterable[Scalar]) -> List[str]:
        order = {v: k for k, v in enumerate(self._canonical_order())}
        return [format_scalar(v) for v in sorted(values, key=lambda v: order.get(v, len(order)))]

    def to_json(self) -> Dict[str, object]:
        order = self._canonical_order()
        rules: Dict[str, Dict[str, List[str]]] = {}
        for i, a in enumerate(order):
            row = {}
            for b in order[i:]:
                row[format_scalar(b)] = self._ordered(self.rule(a, b))
            rules[format_scalar(a)] = row
        return {"eigenvalues": [format_scalar(v) for v in order], "rules": rules}

    @classmethod
    def from_json(cls, payload: Mapping[str, object], mode: FieldMode, name: str = "") -> "FusionTable":
        eigenvalues = [parse_scalar(text, mode) for text in payload["eigenvalues"]]
        rules = {}
        for a_text, row in payload["rules"].items():
            a = parse_scalar(a_text, mode)
            for b_text, values in row.items():
                rules[(a, parse_scalar(b_text, mode))] = [parse_scalar(v, mode) for v in values]
        return cls(eigenvalues, rules, name)

    def to_text(self) -> str:
        """Aligned upper-triangular table, rows and columns in display order."""
        labels = [format_scalar(v) for v in self.eigenvalues]
        cells = [["*"] + labels]
        for i, a in enumerate(self.eigenvalues):
            row = [labels[i]]
            for j, b in enumerate(self.eigenvalues):
                if j < i:
                    row.append("")
                    continue
                entry = self.rule(a, b)
                row.append("{" + ", ".join(self._display(entry)) + "}" if entry else "{}")
            cells.append(row)
        widths = [max(len(r[c]) for r in cells) for c in range(len(cells[0]))]
        lines = [" | ".join(cell.ljust(w) for cell, w in zip(r, widths)).rstrip() for r in cells]
        lines.insert(1, "-+-".join("-" * w for w in widths))
        return "\n".join(lines)

    def _display(self, values: Iterable[Scalar]) -> List[str]:
        return [format_scalar(v) for v in sorted(values, key=lambda v: self._position[v])]

    def __repr__(self) -> str:
        return f"FusionTable({self.name or 'unnamed'}, {len(self.eigenvalues)} eigenvalues)"


# ──────────────────────────────────────────────────────────────────────────
# Reference tables
# ──────────────────────────────────────────────────────────────────────────

def associative_table(mode: FieldMode) -> FusionTable:
    one, zero = Scalar.one(mode), Scalar.zero(mode)
    return FusionTable(
        [one, zero],
        {(one, one): [one], (zero, zero): [zero]},
        name="associative",
    )


def axis_table(alpha: Scalar) -> FusionTable:
    """Fusion rules of a Matsuo axis: eigenvalues 1, 0, alpha."""
    one, zero = Scalar.one(alpha.mode), Scalar.zero(alpha.mode)
    return FusionTable(
        [one, zero, alpha],
        {
            (one, one): [one],
            (zero, zero): [zero],
            (one, alpha): [alpha],
            (zero, alpha): [alpha],
            (alpha, alpha): [one, zero],
        },
        name="axis",
    )


def identity_table(alpha: Scalar, m: int) -> FusionTable:
    """Rules for eigenvectors of id_{Sym(m)}: eigenvalues 1, 0, eta(m)."""
    one, zero = Scalar.one(alpha.mode), Scalar.zero(alpha.mode)
    e = closed_forms.eta(alpha, m)
    return FusionTable(
        [one, zero, e],
        {
            (one, one): [one],
            (zero, zero): [zero],
            (one, e): [e],
            (zero, e): [e],
            (e, e): [one, zero, e],
        },
        name=f"identity(m={m})",
    )


def coset_table(alpha: Scalar, m: int, l: int) -> FusionTable:
    """Five-eigenvalue rules satisfied by the coset axis id_{Sym(m)} - id_{Sym(l)}."""
    one, zero = Scalar.one(alpha.mode), Scalar.zero(alpha.mode)
    e_m = closed_forms.eta(alpha, m)
    e_l = closed_forms.eta(alpha, l)
    co = one - e_l
    zeta = e_m - e_l
    return FusionTable(
        [one, zero, e_m, co, zeta],
        {
            (one, one): [one],
            (one, e_m): [e_m],
            (one, co): [co],
            (one, zeta): [zeta],
            (zero, zero): [zero],
            (zero, e_m): [e_m],
            (zero, co): [co],
            (zero, zeta): [zeta],
            (e_m, e_m): [one, zero, e_m],
            (e_m, co): [zeta],
            (e_m, zeta): [co, zeta],
            (co, co): [one, zero, co],
            (co, zeta): [e_m, zeta],
            (zeta, zeta): [one, zero, e_m, co, zeta],
        },
        name=f"coset(m={m}, l={l})",
    )


# ──────────────────────────────────────────────────────────────────────────
# Empirical tables
# ──────────────────────────────────────────────────────────────────────────

def fusion_table(A: AlgebraSpace, dec: Eigendecomposition) -> FusionTable:
    """
    Empirical fusion rules of ``dec``: products of all pairs of basis
    eigenvectors, resolved exactly in the eigenbasis.
    """
    if not dec.complete:
        raise IncompleteDecompositionError("fusion tables need a complete decomposition")
    spaces = dec.spaces
    everything = set(dec.eigenvalues())
    rules: Dict[Tuple[Scalar, Scalar], set] = {}
    for i, first in enumerate(spaces):
        for second in spaces[i:]:
            found: set = set()
            same = first is second
            for p, u in enumerate(first.basis):
                for v in second.basis[p if same else 0:]:
                    product = multiply(A, u, v)
                    if product.is_zero():
                        continue
                    found.update(dec.resolve(product))
                    if found == everything:
                        break
                if found == everything:
                    break
            rules[(first.eigenvalue, second.eigenvalue)] = found
    table = FusionTable(dec.eigenvalues(), rules, name=f"empirical({dec.idempotent.description})")
    logger.debug("Fusion table of %s computed", dec.idempotent.description)
    return table

"""
Registry of verifiable claims about Matsuo algebras and their coset axes.

Each claim is a function of a ClaimContext returning an Outcome, or
raising ClaimFailure with a counterexample payload. Claims that are
specific to one value of alpha are skipped when that value is not among
the requested ones. Reported-only checks finish with status ``noted``.
"""

import logging
import random
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

from algebra.idempotents import (
    algebra_identity,
    central_charge,
    coset_axis,
    subalgebra_identity,
)
from algebra.matsuo import AlgebraSpace, AlgVector, construct_algebra, gram, multiply
from configs.settings import settings
from fusion.gradings import find_z2_gradings
from fusion.miyamoto import axis_report
from fusion.tables import FusionTable, coset_table, fusion_table
from roots.root_systems import RootSystemId
from roots.transpositions import (
    TranspositionSet,
    build_transposition_set,
    conjugate,
    parabolic_subset,
)
from scalars.errors import AxialError
from scalars.field import Scalar, format_scalar
from spectral import closed_forms
from spectral.eigen import check_containments, eigendecompose
from virasoro.curves import asymptote_check, coset_cc_curve, curve_is_formal, match_kac_observations
from virasoro.minimal_models import (
    KacLabel,
    MinimalModel,
    central_charge_pq,
    derive_algebra_fusion_rules,
    kac_labels,
    kac_weight,
    vir_fusion,
)

logger = logging.getLogger(__name__)

QUARTER = Scalar.rational(1, 4)
THIRTY_SECOND = Scalar.rational(1, 32)


class ClaimFailure(AxialError):
    """A claim was contradicted; ``counterexample`` pinpoints where."""

    def __init__(self, message: str, counterexample: Optional[Dict[str, Any]] = None):
        super().__init__(message)
        self.counterexample = counterexample or {}


@dataclass
class Outcome:
    status: str
    details: Dict[str, Any] = field(default_factory=dict)


def passed(**details) -> Outcome:
    return Outcome("pass", details)


def skipped(reason: str) -> Outcome:
    return Outcome("skipped", {"reason": reason})


def noted(**details) -> Outcome:
    return Outcome("noted", details)


def require(condition: bool, message: str, **counterexample) -> None:
    if not condition:
        raise ClaimFailure(message, counterexample)


# ──────────────────────────────────────────────────────────────────────────
# Shared construction cache
# ──────────────────────────────────────────────────────────────────────────

class ClaimContext:
    """
    Parameters and cached constructions shared by all claims of one run.

    Parameters
    ----------
    max_rank : int
        Largest rank of any algebra built.
    alphas : Sequence[Scalar]
        Rational values of alpha to test.
    seed : int
        Seed for sampled checks.
    """

    def __init__(self, max_rank: int, alphas: Sequence[Scalar], seed: int = settings.RANDOM_SEED):
        self.max_rank = max_rank
        self.alphas = list(alphas)
        self.rng = random.Random(seed)
        self._tsets: Dict[Tuple[str, int], TranspositionSet] = {}
        self._algebras: Dict[Tuple[str, int, str, str, bool], AlgebraSpace] = {}

    def tset(self, family: str, rank: int) -> TranspositionSet:
        key = (family, rank)
        if key not in self._tsets:
            self._tsets[key] = build_transposition_set(RootSystemId(family, rank))
        return self._tsets[key]

    def algebra(self, family: str, rank: int, alpha: Scalar, hat: bool = False) -> AlgebraSpace:
        key = (family, rank, alpha.mode.value, format_scalar(alpha), hat)
        if key not in self._algebras:
            self._algebras[key] = construct_algebra(self.tset(family, rank), alpha, hat)
        return self._algebras[key]

    def symbolic(self, family: str, rank: int, hat: bool = False) -> AlgebraSpace:
        return self.algebra(family, rank, Scalar.symbol(), hat)

    def has_alpha(self, alpha: Scalar) -> bool:
        return alpha in self.alphas

    def built_systems(self) -> List[Tuple[str, int]]:
        """Every root system up to ``max_rank``."""
        systems = [("A", n) for n in range(1, self.max_rank + 1)]
        systems += [("D", n) for n in range(4, self.max_rank + 1)]
        systems += [("E", n) for n in (6, 7, 8) if n <= self.max_rank]
        return systems


def _points(k: int) -> List[int]:
    return list(range(1, k + 1))


def _coset(A: AlgebraSpace, m: int, l: int):
    tset = A.transpositions
    return coset_axis(A, parabolic_subset(tset, _points(m)), parabolic_subset(tset, _points(l)))


def _identity(A: AlgebraSpace, m: int):
    return subalgebra_identity(A, parabolic_subset(A.transpositions, _points(m)))


def _dims_json(dims: Dict[Scalar, int]) -> Dict[str, int]:
    return {format_scalar(k): v for k, v in dims.items()}


# ──────────────────────────────────────────────────────────────────────────
# Transposition sets
# ──────────────────────────────────────────────────────────────────────────

REGULARITY_SYSTEMS = [("A", n) for n in range(1, 8)] + [("D", 4), ("D", 5), ("D", 6)] + [
    ("E", 6), ("E", 7), ("E", 8)
]


def claim_regularity(ctx: ClaimContext) -> Outcome:
    checked = {}
    for family, rank in REGULARITY_SYSTEMS:
        tset = ctx.tset(family, rank)
        system = tset.id
        expected_degree = 2 * system.coxeter_number - 4
        require(
            len(tset) == system.positive_root_count,
            "transposition count differs from the positive root count",
            system=str(system), count=len(tset),
        )
        degrees = {len(tset.neighbours(i)) for i in range(len(tset))}
        require(
            degrees == {expected_degree} or (len(tset) == 1 and degrees == {0}),
            "noncommuting graph is not (2h - 4)-regular",
            system=str(system), degrees=sorted(degrees), expected=expected_degree,
        )
        for i in range(len(tset)):
            for j in range(i + 1, len(tset)):
                require(
                    tset.inner(i, j) in (-1, 0, 1),
                    "root pair does not generate a 3-transposition pair",
                    system=str(system), pair=[tset[i].to_json(), tset[j].to_json()],
                )
                if tset.noncommuting(i, j):
                    require(
                        conjugate(tset[i], tset[j]) == conjugate(tset[j], tset[i]),
                        "c^d differs from d^c",
                        system=str(system), pair=[tset[i].to_json(), tset[j].to_json()],
                    )
            image = {tset.conjugate_index(c, i) for c in tset.neighbours(i)}
            require(
                image == set(tset.neighbours(i)),
                "conjugation by d does not permute N(d)",
                system=str(system), d=tset[i].to_json(),
            )
        checked[str(system)] = {"count": len(tset), "degree": expected_degree}
    return passed(systems=checked)


# ──────────────────────────────────────────────────────────────────────────
# Identities
# ──────────────────────────────────────────────────────────────────────────

def claim_unital(ctx: ClaimContext) -> Outcome:
    count = 0
    for alpha in ctx.alphas:
        for family, rank in ctx.built_systems():
            A = ctx.algebra(family, rank, alpha)
            tset = A.transpositions
            k = len(tset.neighbours(0))
            total = A.sum_of(tset)
            factor = 1 + A.half_alpha * k
            identity = algebra_identity(A)
            for i, d in enumerate(tset):
                axis = A.axis(d)
                require(
                    multiply(A, axis, total) == axis.scale(factor),
                    "d times the sum of all axes is not (1 + alpha k / 2) d",
                    system=str(tset.id), alpha=format_scalar(alpha), d=d.to_json(),
                )
                require(
                    multiply(A, identity.vector, axis) == axis,
                    "identity does not fix a basis axis",
                    system=str(tset.id), alpha=format_scalar(alpha), d=d.to_json(),
                )
            count += 1
    return passed(algebras=count)


def _expected_identity_dims(alpha: Scalar, n: int, m: int) -> Dict[Scalar, int]:
    one, zero = Scalar.one(alpha.mode), Scalar.zero(alpha.mode)
    expected: Dict[Scalar, int] = {}
    for value, dim in (
        (one, m * (m - 1) // 2),
        (zero, (n - m) * (n - m + 1) // 2),
        (closed_forms.eta(alpha, m), (m - 1) * (n - m)),
    ):
        if dim:
            expected[value] = expected.get(value, 0) + dim
    return expected


def claim_identity_spectra(ctx: ClaimContext) -> Outcome:
    top = min(7, ctx.max_rank + 1)
    cases = 0
    for alpha in ctx.alphas:
        for n in range(3, top + 1):
            A = ctx.algebra("A", n - 1, alpha)
            for m in range(2, n):
                dec = eigendecompose(A, _identity(A, m))
                expected = _expected_identity_dims(alpha, n, m)
                require(
                    dec.complete and dec.dims() == expected,
                    "identity spectrum differs from {1, 0, eta(m)} with the stated dimensions",
                    alpha=format_scalar(alpha), n=n, m=m,
                    observed=_dims_json(dec.dims()), expected=_dims_json(expected),
                )
                cases += 1

    vectors = 0
    for n, m in ((4, 3), (5, 3), (5, 4)):
        if n - 1 > ctx.max_rank:
            continue
        A = ctx.symbolic("A", n - 1)
        support = _points(m)
        identity = _identity(A, m).vector
        eta = closed_forms.eta(A.alpha, m)
        for z in range(m + 1, n + 1):
            v = closed_forms.identity_zero_eigenvector(A, support, z)
            require(
                multiply(A, identity, v).is_zero(),
                "explicit 0-eigenvector is not annihilated by the identity",
                n=n, m=m, z=z,
            )
            vectors += 1
            for a in support:
                for b in support:
                    if a >= b:
                        continue
                    v = closed_forms.identity_eta_eigenvector(A, support, a, b, z)
                    require(
                        multiply(A, identity, v) == v.scale(eta),
                        "explicit eta(m)-eigenvector fails over Q(alpha)",
                        n=n, m=m, a=a, b=b, z=z,
                    )
                    vectors += 1
    return passed(decompositions=cases, symbolic_eigenvectors=vectors)


# ──────────────────────────────────────────────────────────────────────────
# Coset axes
# ──────────────────────────────────────────────────────────────────────────

COSET_CASES = ((5, 4, 3), (6, 4, 3), (6, 5, 4))


def claim_coset_spectra(ctx: ClaimContext) -> Outcome:
    cases = [c for c in COSET_CASES if c[0] - 1 <= ctx.max_rank]
    if not cases:
        return skipped("coset cases need rank >= 4")

    results = []
    for alpha in ctx.alphas:
        for n, m, l in cases:
            A = ctx.algebra("A", n - 1, alpha)
            x = _coset(A, m, l)
            dec = eigendecompose(A, x)
            expected = set(closed_forms.coset_eigenvalues(alpha, m, l))
            observed = set(dec.eigenvalues())
            where = {"alpha": format_scalar(alpha), "n": n, "m": m, "l": l}
            require(
                dec.complete and observed == expected,
                "coset axis spectrum differs from the five closed-form eigenvalues",
                observed=sorted(format_scalar(v) for v in observed),
                expected=sorted(format_scalar(v) for v in expected),
                **where,
            )

            table = fusion_table(A, dec)
            reference = coset_table(alpha, m, l)
            violations = table.violations(reference)
            require(not violations, "empirical fusion table escapes the coset fusion rules",
                    violations=violations, **where)

            report = check_containments(A, _identity(A, m), _identity(A, l))
            gradings = find_z2_gradings(reference)
            require(
                len(gradings) == 1 and gradings[0].is_trivial,
                "coset fusion rules admit a nontrivial Z/2-grading",
                gradings=[g.to_json() for g in gradings], **where,
            )
            results.append({
                **where,
                "dims": _dims_json(dec.dims()),
                "table_equals_rules": table == reference,
                "containments": sorted(report["containments"]),
            })

    symbolic = None
    if ctx.max_rank >= 4:
        A = ctx.symbolic("A", 4)
        x = _coset(A, 4, 3)
        dec = eigendecompose(A, x, closed_forms.coset_eigenvalues(A.alpha, 4, 3))
        require(dec.complete and not dec.missing,
                "closed-form eigenvalues do not span A_4 over Q(alpha)",
                missing=[format_scalar(v) for v in dec.missing])
        symbolic = _dims_json(dec.dims())
    return passed(cases=results, symbolic_dims=symbolic)


def claim_coset_primitivity(ctx: ClaimContext) -> Outcome:
    top = min(6, ctx.max_rank + 1)
    if top < 4:
        return skipped("primitivity cases need rank >= 3")
    alpha = ctx.alphas[0]
    one = Scalar.one(alpha.mode)
    rows = []
    for n in range(4, top + 1):
        A = ctx.algebra("A", n - 1, alpha)
        for m in range(4, n + 1):
            for l in range(3, m):
                dec = eigendecompose(A, _coset(A, m, l))
                require(dec.complete, "coset decomposition is incomplete", n=n, m=m, l=l)
                dim = len(dec.space(one))
                formula = (m - l) * (m - l + 1) // 2
                where = {"n": n, "m": m, "l": l, "dim": dim}
                require(dim == formula, "1-eigenspace dimension differs from (m-l)(m-l+1)/2",
                        expected=formula, **where)
                require((dim == 1) == (m == l + 1),
                        "primitivity does not match m = l + 1", **where)
                rows.append(where)
    return passed(alpha=format_scalar(alpha), cases=rows, converse_holds=True)


# ──────────────────────────────────────────────────────────────────────────
# Central charges
# ──────────────────────────────────────────────────────────────────────────

def claim_central_charges(ctx: ClaimContext) -> Outcome:
    for alpha in ctx.alphas:
        a = format_scalar(alpha)
        for family, rank in ctx.built_systems():
            A = ctx.algebra(family, rank, alpha)
            system = A.transpositions.id
            size = len(A.transpositions)
            k = len(A.transpositions.neighbours(0))
            h = system.coxeter_number
            cc = central_charge(A, algebra_identity(A))
            require(cc == size / (2 + alpha * k), "cc(id) differs from |D| / (2 + alpha k)",
                    system=str(system), alpha=a, cc=format_scalar(cc))
            weyl = Scalar.constant(alpha.mode, rank * h) / (4 * (1 + alpha * (h - 2)))
            require(cc == weyl, "cc(id) differs from n h / (4 (1 + alpha (h - 2)))",
                    system=str(system), alpha=a, cc=format_scalar(cc))

        n = min(ctx.max_rank, 5) + 1
        A = ctx.algebra("A", n - 1, alpha)
        identities = {m: _identity(A, m).vector for m in range(2, n + 1)}
        for m in identities:
            for l in identities:
                if l < m:
                    require(
                        gram(A, identities[m], identities[l]) == gram(A, identities[l], identities[l]),
                        "<id_E, id_F> differs from <id_F, id_F>", alpha=a, m=m, l=l,
                    )

        for m in range(1, min(6, ctx.max_rank) + 1):
            A = ctx.algebra("A", m, alpha)
            cc = central_charge(A, _coset(A, m + 1, m))
            curve = coset_cc_curve("A", alpha, m)
            require(cc == curve, "coset central charge differs from f^A",
                    alpha=a, m=m, cc=format_scalar(cc), curve=format_scalar(curve))
    return passed(alphas=[format_scalar(a) for a in ctx.alphas])


def claim_d_coset_central_charges(ctx: ClaimContext) -> Outcome:
    n = min(ctx.max_rank, 6)
    if n < 4:
        return skipped("D-type algebras need rank >= 4")
    values = {}
    for alpha in ctx.alphas:
        A = ctx.algebra("D", n, alpha)
        for m in range(2, n + 1):
            cc = central_charge(A, _coset(A, m, m - 1))
            curve = coset_cc_curve("D", alpha, m)
            require(cc == curve, "D-type coset central charge differs from f^D",
                    alpha=format_scalar(alpha), m=m, cc=format_scalar(cc), curve=format_scalar(curve))
            values[f"{format_scalar(alpha)}:{m}"] = {
                "cc": format_scalar(cc),
                "formal": curve_is_formal("D", m),
            }
    return passed(values=values)


def claim_quarter_curves(ctx: ClaimContext) -> Outcome:
    if not ctx.has_alpha(QUARTER):
        return skipped("alpha = 1/4 not requested")
    for m in range(2, 9):
        value = coset_cc_curve("A", QUARTER, m)
        closed = 1 - Scalar.rational(6, (m + 2) * (m + 3))
        require(value == closed, "f^A(m) at 1/4 differs from 1 - 6/((m+2)(m+3))",
                m=m, value=format_scalar(value))
        vir = central_charge_pq(MinimalModel(m + 3, m + 2))
        require(value == vir, "f^A(m) at 1/4 differs from c(m+3, m+2)", m=m)
        d_value = coset_cc_curve("D", QUARTER, m)
        require(d_value == 1, "f^D(m) at 1/4 differs from 1", m=m, value=format_scalar(d_value))
    return passed(range=[2, 8])


def claim_thirty_second(ctx: ClaimContext) -> Outcome:
    if not ctx.has_alpha(THIRTY_SECOND):
        return skipped("alpha = 1/32 not requested")
    target = Scalar.rational(21, 22)
    require(coset_cc_curve("A", THIRTY_SECOND, 2) == target, "f^A(2) at 1/32 differs from 21/22")
    for m in range(1, 9):
        closed = Scalar.rational(8 * m * (m + 61), (m + 30) * (m + 31))
        require(coset_cc_curve("A", THIRTY_SECOND, m) == closed,
                "f^A(m) at 1/32 differs from 8m(m+61)/((m+30)(m+31))", m=m)
    if ctx.max_rank >= 2:
        A = ctx.algebra("A", 2, THIRTY_SECOND)
        cc = central_charge(A, _coset(A, 3, 2))
        require(cc == target, "Gram central charge of the A_2/A_1 coset differs from 21/22",
                cc=format_scalar(cc))
    require(central_charge_pq(MinimalModel(12, 11)) == target, "c(12, 11) differs from 21/22")
    return passed(value="21/22")


def claim_asymptotes(ctx: ClaimContext) -> Outcome:
    reports = {family: asymptote_check(family) for family in ("A", "D")}
    for family, report in reports.items():
        require(report["limit_holds"], "leading ratio differs from 1/(4 alpha)", **report)
    require(reports["A"]["value_at_one_is_half"], "f^A(1) differs from 1/2", **reports["A"])
    return passed(A=reports["A"], D=reports["D"])


def claim_d_curve_at_one(ctx: ClaimContext) -> Outcome:
    report = asymptote_check("D")
    if report["value_at_one_is_half"]:
        return passed(value=report["value_at_one"])
    return noted(
        value=report["value_at_one"],
        note="f^D(1) vanishes identically; the D_1/D_0 coset is the zero vector, also of central charge 0",
    )


# ──────────────────────────────────────────────────────────────────────────
# Doubled algebras
# ──────────────────────────────────────────────────────────────────────────

def claim_hat_identity(ctx: ClaimContext) -> Outcome:
    checked = 0
    for alpha in ctx.alphas:
        for n in range(3, min(5, ctx.max_rank + 1) + 1):
            A = ctx.algebra("A", n - 1, alpha, hat=True)
            identity = algebra_identity(A).vector
            for d in A.transpositions:
                require(
                    multiply(A, A.axis(d, -1), identity) == closed_forms.predicted_minus_times_identity(A, d),
                    "d_- times id_A differs from the closed form",
                    alpha=format_scalar(alpha), n=n, d=d.to_json(),
                )
                checked += 1

    vectors = 0
    for m in (4, 5):
        if m - 1 > ctx.max_rank:
            continue
        A = ctx.symbolic("A", m - 1, hat=True)
        identity = algebra_identity(A).vector
        eta_hat = closed_forms.eta_hat(A.alpha, m)
        t = lambda i, j: closed_forms.sym_transposition(A, i, j)
        for a, b, c, d in (
            (t(1, 2), t(3, 4), t(1, 3), t(2, 4)),
            (t(1, 2), t(3, 4), t(1, 4), t(2, 3)),
            (t(1, 3), t(2, 4), t(1, 4), t(2, 3)),
        ):
            v = closed_forms.hat_eta_eigenvector(A, a, b, c, d)
            require(multiply(A, identity, v) == v.scale(eta_hat),
                    "matching difference is not an eta_hat(m)-eigenvector of id_A",
                    m=m, pairs=[a.to_json(), b.to_json(), c.to_json(), d.to_json()])
            vectors += 1
    return passed(minus_products=checked, symbolic_eigenvectors=vectors)


def claim_hat_spectrum(ctx: ClaimContext) -> Outcome:
    if not ctx.has_alpha(QUARTER):
        return skipped("alpha = 1/4 not requested")
    for m in range(2, 7):
        lhs = closed_forms.eta_hat(QUARTER, m + 1) - closed_forms.eta(QUARTER, m)
        require(lhs == Scalar.rational(m * (m + 1), 2 * (m + 2) * (m + 3)),
                "eta_hat(m+1) - eta(m) at 1/4 differs from m(m+1)/(2(m+2)(m+3))", m=m)
        rhs = closed_forms.eta_hat(QUARTER, m + 1) - closed_forms.eta_hat(QUARTER, m)
        require(rhs == Scalar.rational(3, (m + 2) * (m + 3)),
                "eta_hat(m+1) - eta_hat(m) at 1/4 differs from 3/((m+2)(m+3))", m=m)
        require(closed_forms.eta_hat(QUARTER, m) == Scalar.rational(m - 1, m + 2),
                "eta_hat(m) at 1/4 differs from (m-1)/(m+2)", m=m)
    if ctx.max_rank < 4:
        return passed(closed_forms=[2, 6], spectrum="skipped: needs rank 4")

    A = ctx.algebra("A", 4, QUARTER, hat=True)
    dec = eigendecompose(A, _coset(A, 5, 4))
    expected = {Scalar.rational(p, q) for p, q in ((1, 1), (0, 1), (5, 14), (2, 3), (1, 42), (5, 21), (1, 14))}
    require(
        dec.complete and set(dec.eigenvalues()) == expected,
        "spectrum of x_4 in the doubled A_4 algebra differs from the seven closed-form values",
        observed=_dims_json(dec.dims()),
    )
    require(sum(dec.dims().values()) == A.dimension,
            "eigenspaces of x_4 do not span the doubled A_4 algebra", dimension=A.dimension)
    require(set(closed_forms.coset_eigenvalues(QUARTER, 5, 4, hat=True)) == expected,
            "closed-form doubled coset eigenvalues disagree at m = 5")
    return passed(closed_forms=[2, 6], dims=_dims_json(dec.dims()), dimension=A.dimension)


def claim_hat_containment(ctx: ClaimContext) -> Outcome:
    if ctx.max_rank < 4:
        return skipped("needs the doubled A_4 algebra")
    reports = []
    for alpha in ctx.alphas:
        A = ctx.algebra("A", 4, alpha, hat=True)
        report = check_containments(A, _identity(A, 5), _identity(A, 4))
        require("eta_hat" in report["containments"], "eta_hat containment was not checked")
        reports.append({"alpha": format_scalar(alpha), "commute": report["commute"],
                        **report["containments"]["eta_hat"]})
    return passed(cases=reports)


# ──────────────────────────────────────────────────────────────────────────
# Virasoro
# ──────────────────────────────────────────────────────────────────────────

def expected_v53_table() -> FusionTable:
    r = Scalar.rational
    one, zero, a, b, c = r(1), r(0), r(1, 10), r(-1, 40), r(3, 8)
    return FusionTable(
        [one, zero, a, b, c],
        {
            (one, one): [one],
            (one, a): [a],
            (one, b): [b],
            (one, c): [c],
            (zero, zero): [zero],
            (zero, a): [a],
            (zero, b): [b],
            (zero, c): [c],
            (a, a): [one, zero, a],
            (a, b): [b, c],
            (a, c): [b],
            (b, b): [one, zero, a],
            (b, c): [a],
            (c, c): [one, zero],
        },
        name="V(5,3) expected",
    )


def claim_v53(ctx: ClaimContext) -> Outcome:
    derived = derive_algebra_fusion_rules(MinimalModel(5, 3))
    expected = expected_v53_table()
    require(derived == expected, "derived fusion rules differ from the (5,3) table",
            derived=derived.to_json(), expected=expected.to_json())
    require(derived.to_json() == expected.to_json(), "serialisations differ")
    return passed(table=derived.to_json())


def claim_kac_observations(ctx: ClaimContext) -> Outcome:
    if not ctx.has_alpha(QUARTER):
        return skipped("alpha = 1/4 not requested")
    skipped_labels = 0
    for m in range(2, 9):
        report = match_kac_observations(m)
        require(report["holds"], "eigenvalue differs from its halved Kac weight", **report)
        skipped_labels += sum(1 for c in report["checks"] if c["status"] == "skipped")
    return passed(range=[2, 8], skipped_out_of_range=skipped_labels)


def claim_kac_symmetry(ctx: ClaimContext) -> Outcome:
    models = [MinimalModel(p, q) for p, q in ((5, 4), (5, 3), (6, 5), (7, 6), (12, 11))]
    require(central_charge_pq(models[0]) == Scalar.rational(7, 10), "c(5, 4) differs from 7/10")
    vacuum = KacLabel(1, 1)
    for model in models:
        labels = kac_labels(model)
        for label in labels:
            mirror = KacLabel(model.p - label.r, model.q - label.s)
            require(kac_weight(model, label) == kac_weight(model, mirror),
                    "Kac weight is not symmetric", model=str(model), label=str(label))
            require(vir_fusion(model, vacuum, label) == frozenset([label]),
                    "(1,1) is not a fusion identity", model=str(model), label=str(label))
            for other in labels:
                require(vir_fusion(model, label, other) == vir_fusion(model, other, label),
                        "fusion is not symmetric", model=str(model), pair=[str(label), str(other)])
    return passed(models=[str(m) for m in models])


# ──────────────────────────────────────────────────────────────────────────
# Axiality
# ──────────────────────────────────────────────────────────────────────────

def claim_axiality(ctx: ClaimContext) -> Outcome:
    systems = [("A", n - 1) for n in range(3, min(6, ctx.max_rank + 1) + 1)]
    if ctx.max_rank >= 4:
        systems.append(("D", 4))
    axes = 0
    for alpha in ctx.alphas:
        for family, rank in systems:
            A = ctx.algebra(family, rank, alpha)
            tset = A.transpositions
            one, zero = A.one_scalar, A.zero_scalar
            for index in range(len(tset)):
                report = axis_report(A, index)
                where = {"alpha": format_scalar(alpha), "system": str(tset.id)}
                require(report["holds"], "axis fails the axial checks", report=report, **where)
                half_n = len(tset.neighbours(index)) // 2
                expected = {one: 1, zero: len(tset.commuting(index)) + half_n, alpha: half_n}
                expected = {k: v for k, v in expected.items() if v}
                require(report["dims"] == _dims_json(expected), "axis spectrum dimensions differ",
                        report=report, **where)
                axes += 1
    return passed(axes=axes, systems=[f"{f}{r}" for f, r in systems])


# ──────────────────────────────────────────────────────────────────────────
# Reported-only checks
# ──────────────────────────────────────────────────────────────────────────

def _random_vector(ctx: ClaimContext, A: AlgebraSpace) -> AlgVector:
    coeffs = {}
    for label in ctx.rng.sample(A.labels, min(4, A.dimension)):
        coeffs[label] = Scalar.constant(A.mode, ctx.rng.randint(-3, 3))
    return A.vector(coeffs)


def claim_frobenius(ctx: ClaimContext) -> Outcome:
    results = {}
    alpha = ctx.alphas[0]
    for family, rank in [("A", n) for n in range(2, min(4, ctx.max_rank) + 1)] + [("D", 4)]:
        if rank > ctx.max_rank:
            continue
        A = ctx.algebra(family, rank, alpha)
        failures = 0
        for _ in range(settings.FROBENIUS_SAMPLES):
            u, v, w = (_random_vector(ctx, A) for _ in range(3))
            if gram(A, multiply(A, u, v), w) != gram(A, u, multiply(A, v, w)):
                failures += 1
        results[f"{family}{rank}"] = {"samples": settings.FROBENIUS_SAMPLES, "failures": failures}
    return noted(alpha=format_scalar(alpha), results=results,
                 holds=all(r["failures"] == 0 for r in results.values()))


def claim_degenerate_spectra(ctx: ClaimContext) -> Outcome:
    alpha = ctx.alphas[0]
    spectra = []
    for n in range(4, min(6, ctx.max_rank + 1) + 1):
        A = ctx.algebra("A", n - 1, alpha)
        for l in range(2, n):
            dec = eigendecompose(A, _coset(A, n, l))
            predicted = set(closed_forms.coset_eigenvalues(alpha, n, l))
            spectra.append({
                "n": n, "m": n, "l": l,
                "complete": dec.complete,
                "dims": _dims_json(dec.dims()),
                "absent": sorted(format_scalar(v) for v in predicted - set(dec.eigenvalues())),
            })
    return noted(alpha=format_scalar(alpha), spectra=spectra)


def _variant_eta_vector(A: AlgebraSpace, support: List[int], a: int, b: int, z: int) -> AlgVector:
    """2(1 + alpha(m-2))((az) - (bz)) + alpha(m-2) sum ((ac) - (bc))."""
    axis = lambda i, j: A.axis(closed_forms.sym_transposition(A, i, j))
    m = len(support)
    vector = (axis(a, z) - axis(b, z)).scale(2 * (1 + A.alpha * (m - 2)))
    for c in support:
        if c not in (a, b):
            vector = vector + (axis(a, c) - axis(b, c)).scale(A.alpha * (m - 2))
    return vector


def claim_eta_vector_normalisation(ctx: ClaimContext) -> Outcome:
    outcomes = []
    for n, m in ((4, 3), (5, 4)):
        if n - 1 > ctx.max_rank:
            continue
        A = ctx.symbolic("A", n - 1)
        support = _points(m)
        identity = _identity(A, m).vector
        eta = closed_forms.eta(A.alpha, m)
        variant = _variant_eta_vector(A, support, 1, 2, m + 1)
        corrected = closed_forms.identity_eta_eigenvector(A, support, 1, 2, m + 1)
        outcomes.append({
            "n": n, "m": m,
            "variant_is_eigenvector": multiply(A, identity, variant) == variant.scale(eta),
            "corrected_is_eigenvector": multiply(A, identity, corrected) == corrected.scale(eta),
        })
    return noted(
        cases=outcomes,
        note="eigenvectors use (2 + alpha(m-4)) and -alpha as coefficients",
    )


# ──────────────────────────────────────────────────────────────────────────
# Registry
# ──────────────────────────────────────────────────────────────────────────

@dataclass(frozen=True)
class Claim:
    id: str
    anchor: str
    check: Callable[[ClaimContext], Outcome]


CLAIMS: List[Claim] = [
    Claim("c01", "Weyl groups as transposition groups: (2h-4)-regular noncommuting graph", claim_regularity),
    Claim("c02", "Matsuo algebras of regular transposition groups are unital", claim_unital),
    Claim("c03", "eigenvalues and eigenvectors of subalgebra identities", claim_identity_spectra),
    Claim("c04", "coset axis eigenvalues, containments and fusion rules", claim_coset_spectra),
    Claim("c05", "coset axes are primitive exactly for consecutive symmetric groups", claim_coset_primitivity),
    Claim("c06", "central charges of identities and of A-type coset axes", claim_central_charges),
    Claim("c07", "central charges of D-type coset axes", claim_d_coset_central_charges),
    Claim("c08", "central charge curves at alpha = 1/4", claim_quarter_curves),
    Claim("c09", "central charge 21/22 at alpha = 1/32", claim_thirty_second),
    Claim("c10", "central charge curves tend to 1/(4 alpha)", claim_asymptotes),
    Claim("c11", "value of the D-type curve at m = 1", claim_d_curve_at_one),
    Claim("c12", "identity of the doubled algebra on negative axes", claim_hat_identity),
    Claim("c13", "eigenvalues of doubled coset axes at alpha = 1/4", claim_hat_spectrum),
    Claim("c14", "eta_hat containment in the doubled algebra", claim_hat_containment),
    Claim("c15", "fusion rules derived from the (5,3) minimal model", claim_v53),
    Claim("c16", "coset eigenvalues at alpha = 1/4 are halved Kac weights", claim_kac_observations),
    Claim("c17", "Kac table symmetry and fusion of Kac labels", claim_kac_symmetry),
    Claim("c18", "Matsuo algebras are axial representations", claim_axiality),
    Claim("c19", "associativity of the form (reported)", claim_frobenius),
    Claim("c20", "spectra of coset axes with m = n (reported)", claim_degenerate_spectra),
    Claim("c21", "normalisation of the eta(m)-eigenvectors (reported)", claim_eta_vector_normalisation),
]

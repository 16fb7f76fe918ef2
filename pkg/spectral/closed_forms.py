"""
Closed-form eigenvalues and eigenvectors of identities and coset axes in
Matsuo algebras of symmetric groups.

Points are 1-based coordinates of the A-type realisation, so the
transposition (i j) is the root e_i - e_j.
"""

from typing import Iterable, List, Sequence

from algebra.matsuo import AlgebraSpace, AlgVector
from roots.transpositions import Transposition, parabolic_subset, regularity_degree
from scalars.field import Scalar

# ──────────────────────────────────────────────────────────────────────────
# Eigenvalue functions
# ──────────────────────────────────────────────────────────────────────────


def eta(alpha: Scalar, m: int) -> Scalar:
    """alpha m / (2 + 2 alpha (m - 2)): the third eigenvalue of id_{Sym(m)}."""
    return alpha * m / (2 + 2 * alpha * (m - 2))


def eta_hat(alpha: Scalar, m: int) -> Scalar:
    """alpha (m - 1) / (1 + alpha (m - 2)): extra eigenvalue in the doubled algebra."""
    return alpha * (m - 1) / (1 + alpha * (m - 2))


def dedupe(values: Iterable[Scalar]) -> List[Scalar]:
    seen = set()
    out = []
    for v in values:
        if v not in seen:
            seen.add(v)
            out.append(v)
    return out


def axis_eigenvalues(alpha: Scalar) -> List[Scalar]:
    return dedupe([Scalar.one(alpha.mode), Scalar.zero(alpha.mode), alpha])


def identity_eigenvalues(alpha: Scalar, m: int, hat: bool = False) -> List[Scalar]:
    values = [Scalar.one(alpha.mode), Scalar.zero(alpha.mode), eta(alpha, m)]
    if hat:
        values.append(eta_hat(alpha, m))
    return dedupe(values)


def coset_eigenvalues(alpha: Scalar, m: int, l: int, hat: bool = False) -> List[Scalar]:
    """
    Eigenvalues of the coset axis id_{Sym(m)} - id_{Sym(l)}.

    The doubled algebra adds eta_hat(m) - eta(l) and eta_hat(m) - eta_hat(l).
    """
    one = Scalar.one(alpha.mode)
    values = [
        one,
        Scalar.zero(alpha.mode),
        eta(alpha, m),
        one - eta(alpha, l),
        eta(alpha, m) - eta(alpha, l),
    ]
    if hat:
        values.append(eta_hat(alpha, m) - eta(alpha, l))
        values.append(eta_hat(alpha, m) - eta_hat(alpha, l))
    return dedupe(values)


# ──────────────────────────────────────────────────────────────────────────
# Explicit eigenvectors
# ──────────────────────────────────────────────────────────────────────────


def sym_transposition(A: AlgebraSpace, i: int, j: int) -> Transposition:
    """The transposition (i j) of an A-type algebra (1-based points)."""
    system = A.transpositions.id
    if system.family != "A":
        raise ValueError("point transpositions exist only in A-type algebras")
    i, j = sorted((i, j))
    root = [0] * system.ambient_dimension
    root[i - 1], root[j - 1] = 1, -1
    return Transposition(tuple(root))


def _axis(A: AlgebraSpace, i: int, j: int, sign: int = 1) -> AlgVector:
    return A.axis(sym_transposition(A, i, j), sign)


def identity_vector(A: AlgebraSpace, support: Sequence[int]) -> AlgVector:
    E = parabolic_subset(A.transpositions, support)
    k = regularity_degree(E)
    return A.sum_of(E).scale(1 / (1 + A.half_alpha * k))


def identity_zero_eigenvector(A: AlgebraSpace, support: Sequence[int], z: int) -> AlgVector:
    """sum_{c in S} (c z) - alpha id_S, a 0-eigenvector of id_S for z outside S."""
    total = A.zero()
    for c in support:
        total = total + _axis(A, c, z)
    return total - identity_vector(A, support).scale(A.alpha)


def identity_eta_eigenvector(A: AlgebraSpace, support: Sequence[int], a: int, b: int, z: int) -> AlgVector:
    """
    eta(m)-eigenvector of id_S for a, b in S and z outside S:

        (2 + alpha (m - 4)) ((a z) - (b z)) - alpha sum_{c in S - {a, b}} ((a c) - (b c))
    """
    m = len(support)
    lead = 2 + A.alpha * (m - 4)
    vector = (_axis(A, a, z) - _axis(A, b, z)).scale(lead)
    for c in support:
        if c in (a, b):
            continue
        vector = vector - (_axis(A, a, c) - _axis(A, b, c)).scale(A.alpha)
    return vector


def predicted_minus_times_identity(A: AlgebraSpace, d: Transposition) -> AlgVector:
    """
    d_- · id_A in the doubled algebra:

        alpha / (2 + alpha k) * (k d_- + sum_{c in N(d)} (c_+ - c_-))
    """
    tset = A.transpositions
    k = len(tset.neighbours(0))
    i = tset.index_of(d)
    vector = A.axis(d, -1).scale(k)
    for j in sorted(tset.neighbours(i)):
        vector = vector + A.axis(tset[j]) - A.axis(tset[j], -1)
    return vector.scale(A.alpha / (2 + A.alpha * k))


def hat_eta_eigenvector(
    A: AlgebraSpace, a: Transposition, b: Transposition, c: Transposition, d: Transposition
) -> AlgVector:
    """alpha (a+ + b+ - c+ - d+) + (1 - alpha)(a- + b- - c- - d-), an eta_hat-eigenvector of id_A."""
    plus = A.axis(a) + A.axis(b) - A.axis(c) - A.axis(d)
    minus = A.axis(a, -1) + A.axis(b, -1) - A.axis(c, -1) - A.axis(d, -1)
    return plus.scale(A.alpha) + minus.scale(1 - A.alpha)

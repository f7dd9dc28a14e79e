"""
tableau_forge/core/alternant.py – Alternant determinants ā_λ evaluated at powers of q.

alternant(λ, ν) = det( q^{ν_{n+1-j} (λ_i + n - i)} ), an exact Laurent polynomial.
Small matrices are expanded over permutations; larger ones use sympy's
fraction-free Bareiss elimination after clearing negative exponents column by column.
"""

from collections import Counter
from itertools import permutations
from typing import Sequence

import sympy

from tableau_forge import config as cfg
from tableau_forge.core.errors import DimensionMismatchError
from tableau_forge.core.qalg import QSeries
from tableau_forge.core.shapes import Partition
from tableau_forge.utils.logger import get_logger

logger = get_logger(__name__)


def _sign(perm: Sequence[int]) -> int:
    inversions = sum(1 for i in range(len(perm)) for j in range(i + 1, len(perm)) if perm[i] > perm[j])
    return -1 if inversions % 2 else 1


def exponent_matrix(lam: Partition, nu: Sequence[int]) -> list[list[int]]:
    n = len(nu)
    if len(lam) > n:
        raise DimensionMismatchError(f"Partition ({lam}) has {len(lam)} parts but only {n} variables were given")
    rows = [p + n - i for i, p in enumerate(lam.padded(n), 1)]
    return [[nu[n - j] * r for j in range(1, n + 1)] for r in rows]


def _by_permutations(exps: list[list[int]]) -> QSeries:
    n = len(exps)
    terms: Counter = Counter()
    for perm in permutations(range(n)):
        terms[sum(exps[i][perm[i]] for i in range(n))] += _sign(perm)
    return QSeries.from_terms(dict(terms))


def _by_bareiss(exps: list[list[int]]) -> QSeries:
    q = sympy.Symbol("q")
    n = len(exps)
    shifts = [min(exps[i][j] for i in range(n)) for j in range(n)]
    matrix = sympy.Matrix(n, n, lambda i, j: q ** (exps[i][j] - shifts[j]))
    det = sympy.expand(matrix.det(method="bareiss"))
    if det == 0:
        return QSeries.from_terms({})
    poly = sympy.Poly(det, q)
    offset = sum(shifts)
    return QSeries.from_terms({m[0] + offset: int(c) for m, c in poly.terms()})


def alternant(lam: Partition, nu: Sequence[int]) -> QSeries:
    """Exact ā_λ(q^{ν_1}, ..., q^{ν_n}); n is the length of ν."""
    nu = [int(v) for v in nu]
    exps = exponent_matrix(lam, nu)
    if not exps:
        return QSeries.monomial(0)
    if len(exps) <= cfg.PERMUTATION_DET_MAX:
        return _by_permutations(exps)
    logger.debug("[ALTERNANT] Bareiss elimination for n=%d", len(exps))
    return _by_bareiss(exps)


def vandermonde(nu: Sequence[int]) -> QSeries:
    """Δ̄(q^ν) = ā_{δ_n}(q^ν), i.e. the alternant at λ = 0."""
    return alternant(Partition(), nu)


def vandermonde_product(nu: Sequence[int]) -> QSeries:
    """(-1)^{C(n,2)} ∏_{i<j} (q^{ν_i} - q^{ν_j})."""
    n = len(nu)
    result = QSeries.monomial(0, -1 if (n * (n - 1) // 2) % 2 else 1)
    for i in range(n):
        for j in range(i + 1, n):
            result = result * (QSeries.monomial(nu[i]) - QSeries.monomial(nu[j]))
    return result

"""
tableau_forge/core/qcalculus.py – q-integrals at rational q and Selberg-type evaluations.

All values are exact Fractions. Infinite lattice sums are cut at a depth K
and reported together with a tail estimate; half-integer Gamma values live in
the ring Q[√π] as SqrtPiRational.
"""

from __future__ import annotations

import math
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations as pairs, combinations_with_replacement
from typing import Callable, NamedTuple, Sequence

from tableau_forge import config as cfg
from tableau_forge.core.errors import (
    DivergenceSuspectedError,
    IdentityMismatchError,
    InvalidParametersError,
    PoleError,
)
from tableau_forge.core.qalg import gimel, phi
from tableau_forge.core.shapes import Partition, hook_length
from tableau_forge.utils.logger import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True)
class QPoint:
    q: Fraction = cfg.DEFAULT_Q
    depth: int = cfg.QINTEGRAL_DEPTH

    def __post_init__(self):
        q = Fraction(self.q)
        if not 0 < q < 1:
            raise InvalidParametersError(f"q must lie strictly between 0 and 1, got {q}")
        if self.depth < 1:
            raise InvalidParametersError(f"Truncation depth must be positive, got {self.depth}")
        object.__setattr__(self, "q", q)


class QSum(NamedTuple):
    """A truncated lattice sum and the geometric estimate of what was cut off."""

    value: Fraction
    tail_bound: Fraction

    def within(self, exact: Fraction) -> bool:
        return abs(self.value - exact) <= self.tail_bound


def qpoch(x: Fraction, q: Fraction, k: int) -> Fraction:
    """(x; q)_k = ∏_{i<k} (1 - x q^i)."""
    result = Fraction(1)
    for i in range(k):
        result *= 1 - x * q ** i
    return result


def _geometric_tail(shells: Sequence[Fraction], q: Fraction) -> Fraction:
    """Estimate Σ_{k>K} |shell_k| by extending the largest ratio of the last shells.

    Exact when the shells are geometric; otherwise an extrapolation, not a proof.
    """
    tail = [abs(s) for s in shells[-4:]]
    if tail[-1] == 0:
        return Fraction(0)
    ratios = [b / a for a, b in zip(tail, tail[1:]) if a != 0]
    if not ratios:
        raise DivergenceSuspectedError("Too few nonzero terms to estimate the tail")
    r = max(ratios)
    if r >= 1:
        raise DivergenceSuspectedError(f"Lattice terms stopped decreasing (ratio {r}) at q = {q}")
    return tail[-1] * r / (1 - r)


# ── One-variable q-integrals ─────────────────────────────────────────────────

def q_integral(f: Callable[[Fraction], Fraction], a: Fraction, b: Fraction, pt: QPoint = QPoint()) -> QSum:
    """(1-q) Σ_{i=0}^{K} (f(bq^i) bq^i - f(aq^i) aq^i) with a geometric tail estimate."""
    q = pt.q
    a, b = Fraction(a), Fraction(b)
    terms = []
    for i in range(pt.depth + 1):
        x_b, x_a = b * q ** i, a * q ** i
        terms.append((1 - q) * (Fraction(f(x_b)) * x_b - (Fraction(f(x_a)) * x_a if a else 0)))
    return QSum(sum(terms, Fraction(0)), _geometric_tail(terms, q))


def q_integral_monomial(k: int, b: Fraction, q: Fraction) -> Fraction:
    """∫_0^b x^k d_q x = (1-q) b^{k+1} / (1-q^{k+1}), summed in closed form."""
    b, q = Fraction(b), Fraction(q)
    return (1 - q) * b ** (k + 1) / (1 - q ** (k + 1))


def q_change_of_variables(j: int, m: int, q: Fraction, k: int = 0) -> tuple[Fraction, Fraction]:
    """Both sides of ∫_0^1 f(x^m, q^m) d_q x = (1-q)/(1-p) ∫_0^1 f(x, p) x^{(1-m)/m} d_p x.

    f(x, q) = x^j q^k and p = q^m; the right side integrates x^{j+(1-m)/m}, whose
    geometric ratio p^{j+1/m} equals q^{mj+1}.
    """
    if m < 1:
        raise InvalidParametersError(f"m must be positive, got {m}")
    q = Fraction(q)
    p = q ** m
    lhs = q ** (m * k) * q_integral_monomial(m * j, Fraction(1), q)
    ratio = q ** (m * j + 1)  # p^{(j + (1-m)/m) + 1}
    rhs = (1 - q) / (1 - p) * p ** k * (1 - p) / (1 - ratio)
    return lhs, rhs


# ── Multivariate q-integrals ─────────────────────────────────────────────────

def _ordered_exponents(n: int, low: int, high: int):
    """Exponent vectors e_1 >= ... >= e_n in [low, high] (so x_1 <= ... <= x_n)."""
    for combo in combinations_with_replacement(range(high, low - 1, -1), n):
        yield combo


def q_integral_simplex(f: Callable[..., Fraction], n: int, pt: QPoint = QPoint()) -> QSum:
    """∫_{0<=x_1<=...<=x_n<=1} f d_q x as a lattice sum over exponents <= K."""
    q = pt.q
    shells = [Fraction(0)] * (pt.depth + 1)
    weight = (1 - q) ** n
    for e in _ordered_exponents(n, 0, pt.depth):
        xs = [q ** k for k in e]
        shells[e[0]] += weight * math.prod(xs) * Fraction(f(*xs))
    return QSum(sum(shells, Fraction(0)), _geometric_tail(shells, q))


def partition_lattice_sum(f: Callable[..., Fraction], n: int, pt: QPoint = QPoint()) -> QSum:
    """Σ_{μ in Par_n, μ_1+n-1 <= K} q^{|μ+δ_n|} f(q^{μ+δ_n})."""
    q = pt.q
    shells = [Fraction(0)] * (pt.depth + 1)
    for e in _ordered_exponents(n, 0, pt.depth):
        if any(x <= y for x, y in zip(e, e[1:])):
            continue  # μ + δ_n is strictly decreasing
        xs = [q ** k for k in e]
        shells[e[0]] += math.prod(xs) * Fraction(f(*xs))
    return QSum(sum(shells, Fraction(0)), _geometric_tail(shells, q))


def vandermonde_squared(*xs: Fraction) -> Fraction:
    return math.prod(((x - y) ** 2 for x, y in pairs(xs, 2)), start=Fraction(1))


# ── q-Selberg integral ───────────────────────────────────────────────────────

def _selberg_integrand(alpha: int, beta: int, a: Fraction, b: Fraction, q: Fraction):
    def integrand(*xs: Fraction) -> Fraction:
        value = vandermonde_squared(*xs)
        for x in xs:
            if a:
                value *= qpoch(q * x / a, q, alpha - 1)
            else:
                value *= x ** (alpha - 1)
            value *= qpoch(q * x / b, q, beta - 1)
        return value
    return integrand


def q_selberg_lhs(n: int, alpha: int, beta: int, s: int | None, t: int, pt: QPoint = QPoint()) -> QSum:
    """The q-Selberg integral over a <= x_1 <= ... <= x_n <= b with a = q^s (or 0), b = q^t.

    For a = q^s the lattice is finite and the sum is exact; for a = 0 (s=None)
    exponents run up to t + K and the tail bound is rigorous.
    """
    _check_selberg(n, alpha, beta)
    q = pt.q
    if s is not None and s <= t:
        raise InvalidParametersError(f"Need a < b, i.e. s > t; got s={s}, t={t}")
    a = Fraction(0) if s is None else q ** s
    b = q ** t
    f = _selberg_integrand(alpha, beta, a, b, q)
    high = t + pt.depth if s is None else s - 1
    weight = (1 - q) ** n
    total = Fraction(0)
    for e in _ordered_exponents(n, t, high):
        xs = [q ** k for k in e]
        total += weight * math.prod(xs) * f(*xs)
    if s is not None:
        return QSum(total, Fraction(0))
    bound = (1 - q) ** n * q ** (alpha * (n * t + pt.depth + 1)) / (1 - q ** alpha) ** n
    return QSum(total, bound)


def _check_selberg(n: int, alpha: int, beta: int):
    if n < 1 or alpha < 1 or beta < 1:
        raise InvalidParametersError(f"Need n, alpha, beta >= 1; got n={n}, alpha={alpha}, beta={beta}")


def q_selberg_rhs(n: int, alpha: int, beta: int, a: Fraction, b: Fraction, q: Fraction) -> Fraction:
    """Product side of the q-Selberg integral, with (x)_k read as (x; q)_k."""
    _check_selberg(n, alpha, beta)
    a, b, q = Fraction(a), Fraction(b), Fraction(q)
    if a == 0:
        return q_selberg_rhs_at_zero(n, alpha, beta, b, q)
    if a == b:
        raise PoleError(f"q-Selberg product has a pole at a = b = {a}")
    value = Fraction((-1) ** math.comb(n, 2)) * q ** math.comb(n, 3)
    for i in range(n):
        value *= (
            (1 - q) ** (n - 2 * i)
            * qpoch(q, q, alpha + i - 1)
            * qpoch(q, q, beta + i - 1)
            * qpoch(q, q, i)
            * qpoch(a / b, q, beta + i)
            * qpoch(b / a, q, alpha + i)
            * (a * b) ** (i + 1)
            / ((a - b) * qpoch(q, q, alpha + beta + n + i - 2))
        )
    return value


def gamma_q(k: int, q: Fraction) -> Fraction:
    """Γ_q(k) = (q;q)_{k-1} / (1-q)^{k-1} for positive integers k."""
    if k < 1:
        raise InvalidParametersError(f"Γ_q is evaluated at positive integers only, got {k}")
    return qpoch(q, q, k - 1) / (1 - q) ** (k - 1)


def q_selberg_rhs_gamma(n: int, alpha: int, beta: int, a: Fraction, b: Fraction, q: Fraction) -> Fraction:
    """The same product written with Γ_q; kept as a cross-check of q_selberg_rhs."""
    _check_selberg(n, alpha, beta)
    a, b, q = Fraction(a), Fraction(b), Fraction(q)
    if a == b:
        raise PoleError(f"q-Selberg product has a pole at a = b = {a}")
    value = Fraction((-1) ** math.comb(n, 2)) * q ** math.comb(n, 3)
    for i in range(n):
        value *= (
            gamma_q(alpha + i, q) * gamma_q(beta + i, q) * gamma_q(i + 1, q)
            * qpoch(a / b, q, beta + i) * qpoch(b / a, q, alpha + i) * (a * b) ** (i + 1)
            / (gamma_q(alpha + beta + n + i - 1, q) * (a - b))
        )
    return value


def q_selberg_rhs_at_zero(n: int, alpha: int, beta: int, b: Fraction, q: Fraction) -> Fraction:
    """Closed form at a = 0, where the integrand is Δ² ∏ x^{α-1} (qx/b; q)_{β-1}."""
    b, q = Fraction(b), Fraction(q)
    value = q ** ((alpha - 1) * math.comb(n, 2) + n * (n - 1) * (2 * n - 1) // 6)
    value *= b ** (n * alpha + n * (n - 1)) * (1 - q) ** n
    for i in range(1, n + 1):
        value *= qpoch(q, q, beta + i - 2) * qpoch(q, q, i - 1) / qpoch(q ** (alpha - 1 + i), q, n + beta - 1)
    return value


# ── Gamma values in Q[√π] ────────────────────────────────────────────────────

@dataclass(frozen=True)
class SqrtPiRational:
    """rational · (√π)^sqrt_pi_power."""

    rational: Fraction
    sqrt_pi_power: int = 0

    def __mul__(self, other: "SqrtPiRational") -> "SqrtPiRational":
        return SqrtPiRational(self.rational * other.rational, self.sqrt_pi_power + other.sqrt_pi_power)

    def __truediv__(self, other: "SqrtPiRational") -> "SqrtPiRational":
        return SqrtPiRational(self.rational / other.rational, self.sqrt_pi_power - other.sqrt_pi_power)

    def __str__(self) -> str:
        if self.sqrt_pi_power == 0 or self.rational == 0:
            return str(self.rational)
        return f"{self.rational} * sqrt(pi)^{self.sqrt_pi_power}"


def gamma_ratio(numerator: Sequence[Fraction], denominator: Sequence[Fraction]) -> SqrtPiRational:
    """∏Γ(numerator) / ∏Γ(denominator) at rational arguments.

    Integer and half-integer arguments are evaluated directly. Any other
    fractional class must occur equally often above and below the line and is
    reduced to rising factorials.
    """
    classes: dict[Fraction, list[list[Fraction]]] = defaultdict(lambda: [[], []])
    for side, args in ((0, numerator), (1, denominator)):
        for x in args:
            x = Fraction(x)
            if x <= 0:
                raise InvalidParametersError(f"Γ argument {x} is not positive")
            classes[x - math.floor(x)][side].append(x)
    result = SqrtPiRational(Fraction(1))
    for frac, (num, den) in classes.items():
        if frac == 0 or frac == Fraction(1, 2):
            for x in num:
                result = result * _gamma_simple(x)
            for x in den:
                result = result / _gamma_simple(x)
            continue
        if len(num) != len(den):
            raise InvalidParametersError(f"Γ arguments of class {frac} do not pair up ({len(num)} above, {len(den)} below)")
        base = min(num + den)
        for x in num:
            result = result * SqrtPiRational(_rising(base, x))
        for x in den:
            result = result / SqrtPiRational(_rising(base, x))
    return result


def _rising(base: Fraction, x: Fraction) -> Fraction:
    """Γ(x)/Γ(base) for x - base a nonnegative integer."""
    return math.prod((base + i for i in range(int(x - base))), start=Fraction(1))


def _gamma_simple(x: Fraction) -> SqrtPiRational:
    if x.denominator == 1:
        return SqrtPiRational(Fraction(math.factorial(x.numerator - 1)))
    k = int(x - Fraction(1, 2))
    return SqrtPiRational(Fraction(math.factorial(2 * k), 4 ** k * math.factorial(k)), 1)


def selberg_gamma_line(n: int, a: int, b: int, m: int) -> SqrtPiRational:
    """(1/n!) ∏_j Γ(x+(j-1)/2)Γ(a+1+(j-1)/2)Γ(1+j/2) / (Γ(x+a+1+(n+j-2)/2)Γ(3/2)), x = (b+1)/m."""
    x = Fraction(b + 1, m)
    half = Fraction(1, 2)
    num, den = [], []
    for j in range(1, n + 1):
        num += [x + (j - 1) * half, a + 1 + (j - 1) * half, 1 + j * half]
        den += [x + a + 1 + (n + j - 2) * half, Fraction(3, 2)]
    return gamma_ratio(num, den) * SqrtPiRational(Fraction(1, math.factorial(n)))


def selberg_case_value(n: int, a: int, b: int, m: int) -> Fraction:
    """The same integral in its explicit even/odd n form (no √π survives)."""
    if n % 2 == 0:
        big_n = n // 2
        num = [
            m ** (big_n + 2 * big_n * (big_n + a)), 2 ** big_n,
            phi(2 * big_n + 2 * a), gimel(2 * a), gimel(2 * big_n),
        ]
        den = [phi(2 * a), gimel(2 * big_n + 2 * a)]
        den += [b + 1 + m * i for i in range(big_n)]
        den += [2 * (b + 1) + (2 * i + j) * m for j in range(1, 2 * big_n + 1) for i in range(big_n + a)]
    else:
        big_n = (n - 1) // 2
        num = [
            m ** ((2 * big_n + 1) * (big_n + a + 1)), 2 ** (2 * big_n + 1),
            phi(2 * big_n + 2 * a + 1), gimel(2 * a), gimel(2 * big_n + 1),
        ]
        den = [phi(2 * a), gimel(2 * big_n + 2 * a + 1)]
        den += [2 * (b + 1) + (2 * i + j - 1) * m for j in range(1, 2 * big_n + 2) for i in range(big_n + a + 1)]
    return Fraction(math.prod(num), math.prod(den))


def selberg_gamma_forms(n: int, a: int, b: int, m: int) -> tuple[SqrtPiRational, SqrtPiRational]:
    """(Γ-product line, explicit case line), both exact."""
    if n < 1 or a < 0 or b < 0 or m < 1:
        raise InvalidParametersError(f"Need n, m >= 1 and a, b >= 0; got n={n}, a={a}, b={b}, m={m}")
    return selberg_gamma_line(n, a, b, m), SqrtPiRational(selberg_case_value(n, a, b, m))


# ── Schur-weighted Selberg integral and the ρ ledger ─────────────────────────

def warnaar_rhs(lam: Partition, alpha: int, beta: int, n: int) -> Fraction:
    """∏_{(i,j)∈λ} (n-i+j)/h_λ(i,j) · ∏_i (α+n-i+λ_i-1)! (β+i-2)! i! / (α+β+2n-i-2+λ_i)!."""
    if len(lam) > n:
        raise InvalidParametersError(f"({lam}) has more than n={n} parts")
    value = Fraction(1)
    for cell in lam.cells():
        i, j = cell
        value *= Fraction(n - i + j, hook_length(lam, cell))
    for i in range(1, n + 1):
        li = lam.part(i)
        args = (alpha + n - i + li - 1, beta + i - 2, alpha + beta + 2 * n - i - 2 + li)
        if min(args) < 0:
            raise InvalidParametersError(f"Negative factorial argument for λ=({lam}), α={alpha}, β={beta}, n={n}")
        value *= Fraction(math.factorial(args[0]) * math.factorial(args[1]) * math.factorial(i), math.factorial(args[2]))
    return value


class RhoIntegralLedger(NamedTuple):
    addends: tuple[Fraction, Fraction, Fraction, Fraction]
    total: Fraction
    closed_form: Fraction
    schur_addends: tuple[Fraction, Fraction, Fraction, Fraction]


def rho_integral_identity(n: int, a: int, b: int, c: int, d: int) -> RhoIntegralLedger:
    """Evaluate the four Selberg-type addends, their sum and the combined closed form."""
    if a < 1 or c < 1 or min(n, b, d) < 0:
        raise InvalidParametersError(f"Need a, c >= 1 and n, b, d >= 0; got {(n, a, b, c, d)}")
    s = n + a + b + c + d
    ac, bd = a + c, b + d
    f = math.factorial

    def ratio(num, den):
        return Fraction(math.prod(num), math.prod(den))

    wide = ratio([phi(n + 1), phi(n + ac), phi(n + bd), phi(s + 1)], [phi(ac + 1), phi(bd), phi(n + s)])
    int1 = (
        a * c * math.comb(n, 2) * Fraction(f(s + 1), f(ac + 1))
        * ratio([phi(n + 1), phi(n + ac), phi(n + bd), phi(s - 1)], [phi(ac - 1), phi(bd), phi(n + s)])
    )
    int2 = a * c * math.comb(n + 1, 2) * Fraction(f(ac - 2) if ac >= 2 else 0, f(s - 2)) * wide
    int3 = a * c * n * bd * Fraction(f(ac - 1), f(s - 1)) * wide
    base = ratio([phi(n + 1), phi(n + ac), phi(n + bd), phi(s)], [phi(ac), phi(bd), phi(n + s)])
    int4 = a * b * c * d * base
    addends = (int1, int2, int3, int4)
    total = sum(addends, Fraction(0))
    closed = Fraction(a * c, (ac - 1) * (ac + 1)) * base * (n * s * (n * s + ac * bd) + b * d * (ac - 1) * (ac + 1))

    schur = (
        a * c * warnaar_rhs(Partition((2,) * (n - 2) + (1, 1)), ac - 1, bd + 1, n) if n >= 2 else Fraction(0),
        a * c * warnaar_rhs(Partition((2,) * (n - 1)), ac - 1, bd + 1, n) if n >= 1 else Fraction(0),
        a * c * bd * warnaar_rhs(Partition((1,) * (n - 1)), ac, bd + 1, n) if n >= 1 else Fraction(0),
        a * b * c * d * warnaar_rhs(Partition(), ac + 1, bd + 1, n),
    )
    ledger = RhoIntegralLedger(addends, total, closed, schur)
    if total != closed:
        raise IdentityMismatchError(f"ρ integrals at {(n, a, b, c, d)}: addends sum to {total}, closed form is {closed}")
    if schur != addends:
        raise IdentityMismatchError(f"ρ integrals at {(n, a, b, c, d)}: Schur-weighted values {schur} differ from {addends}")
    logger.debug("[QCALC] ρ integral ledger %s verified", (n, a, b, c, d))
    return ledger

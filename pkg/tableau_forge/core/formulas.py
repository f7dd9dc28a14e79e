"""
tableau_forge/core/formulas.py – Closed-form evaluators for the product formulas.

Every evaluator works in exact rationals or QFactored and checks that the
result is an integer (or a polynomial) before returning it.

Families:
  ρ(n,a,b,c,d)      skew shape ((n+b+c)^{n+a}, (n+c)^d) / (c+1, c^{a-1}, 1)
  V(n,a,b,m)        shifted skew shape over the staircase δ_{a+1}
  M(n,a,b,c,d,m)    skew shape over the rectangle (c^a)
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence

from tableau_forge.core.alternant import alternant
from tableau_forge.core.errors import InvalidParametersError, NonIntegerResultError
from tableau_forge.core.oracle import TableauKind
from tableau_forge.core.qalg import (
    QFactored,
    QSeries,
    XQSeries,
    exact_product,
    expand,
    gimel,
    phi,
    phi_q,
    poch,
)
from tableau_forge.core.shapes import (
    Partition,
    add,
    build_m,
    build_rho,
    build_v,
    conjugate,
    d_region,
    delta,
    hook_length,
    nn,
    shifted_hook_length,
)
from tableau_forge.utils.logger import get_logger

logger = get_logger(__name__)


def _exact_int(value: Fraction, what: str) -> int:
    if value.denominator != 1:
        raise NonIntegerResultError(f"{what} evaluated to the non-integer {value}")
    return value.numerator


def _ratio(num: Sequence[int], den: Sequence[int]) -> Fraction:
    return Fraction(math.prod(num), math.prod(den))


def _check(**params):
    for name, value in params.items():
        if value < 0:
            raise InvalidParametersError(f"{name} must be nonnegative, got {value}")


def _check_m(m: int):
    if m < 1:
        raise InvalidParametersError(f"m must be positive, got {m}")


# ── ρ shapes ─────────────────────────────────────────────────────────────────

def f_rho(n: int, a: int, b: int, c: int, d: int) -> int:
    """Number of SYT of ρ(n,a,b,c,d); needs a, c >= 1."""
    _check(n=n, a=a, b=b, c=c, d=d)
    if a < 1 or c < 1:
        raise InvalidParametersError(f"f_rho needs a >= 1 and c >= 1, got a={a}, c={c}")
    size = build_rho(n, a, b, c, d).size
    s = n + a + b + c + d
    ratio = _ratio(
        [phi(n), phi(a), phi(b), phi(c), phi(d), phi(n + a + c), phi(n + b + d), phi(s)],
        [phi(a + c), phi(b + d), phi(n + a + b), phi(n + c + d), phi(n + s)],
    )
    tail = Fraction(
        a * c * (n * s * (n * s + (a + c) * (b + d)) + b * d * (a + c - 1) * (a + c + 1)),
        (a + c - 1) * (a + c + 1),
    )
    return _exact_int(math.factorial(size) * ratio * tail, f"f_rho{(n, a, b, c, d)}")


def f_rho_intro(n: int, a: int, b: int, c: int, d: int) -> int:
    """Alternative parametrization with the roles of b and c exchanged; counts ρ(n,a,c,b,d)."""
    return f_rho(n, a, c, b, d)


def f_rho_conjecture11(a: int, n: int) -> int:
    """The symmetric case a = b = c = d in its own closed form."""
    _check(n=n)
    if a < 1:
        raise InvalidParametersError(f"a must be positive, got {a}")
    size = build_rho(n, a, a, a, a).size
    ratio = _ratio([phi(a) ** 4, phi(n), phi(n + 4 * a)], [phi(2 * a) ** 2, phi(2 * n + 4 * a)])
    tail = Fraction(a * a * ((n * n + 4 * a * n + 2 * a * a) ** 2 - a * a), 4 * a * a - 1)
    return _exact_int(math.factorial(size) * ratio * tail, f"f_rho_conjecture11({a}, {n})")


# ── V shapes ─────────────────────────────────────────────────────────────────

def _v_constant(n: int, a: int, size: int) -> Fraction:
    """|π|!/2^a · Φ(n+2a)Φ(a)/(Φ(2a)Φ(n+a)) · gimel(2a)gimel(n)/gimel(n+2a)."""
    return Fraction(math.factorial(size), 2 ** a) * _ratio(
        [phi(n + 2 * a), phi(a), gimel(2 * a), gimel(n)],
        [phi(2 * a), phi(n + a), gimel(n + 2 * a)],
    )


def v_hook_cells(n: int, a: int, b: int, m: int) -> list:
    """Cells of λ* outside the region D = {(i, n+j) : i <= j <= a}."""
    shape = build_v(n, a, b, m)
    excluded = set(d_region(n, a))
    return [c for c in shape.outer.shifted_cells() if c not in excluded]


def g_v_hook(n: int, a: int, b: int, m: int) -> int:
    """Hook form of the shifted count; requires n >= 1 whenever a >= 1."""
    _check(n=n, a=a, b=b)
    _check_m(m)
    if n == 0 and a > 0:
        raise InvalidParametersError("The hook form of the shifted count needs n >= 1 when a >= 1")
    shape = build_v(n, a, b, m)
    hooks = math.prod(shifted_hook_length(shape.outer, c) for c in v_hook_cells(n, a, b, m))
    value = _v_constant(n, a, shape.size) / hooks
    return _exact_int(value, f"g_v_hook{(n, a, b, m)}")


def g_v_closed(n: int, a: int, b: int, m: int) -> int:
    """Hook form with the shifted hook product written out in factorials."""
    _check(n=n, a=a, b=b)
    _check_m(m)
    size = build_v(n, a, b, m).size
    rows = n + a
    num = [m ** math.comb(rows, 2), phi(rows)]
    num += [2 * (b + 1) + (n + i + j - 1) * m for i in range(1, a + 1) for j in range(i)]
    den = [math.factorial(b + m * i) for i in range(rows)]
    den += [b + 1 + m * i for i in range(rows)]
    den += [2 * (b + 1) + (i + j) * m for i in range(1, rows) for j in range(i)]
    value = _v_constant(n, a, size) * _ratio(num, den)
    return _exact_int(value, f"g_v_closed{(n, a, b, m)}")


def g_v_selberg(n: int, a: int, b: int, m: int) -> int:
    """The shifted count through the Selberg-type integral value."""
    from tableau_forge.core.qcalculus import selberg_case_value

    _check(n=n, a=a, b=b)
    _check_m(m)
    size = build_v(n, a, b, m).size
    if n == 0:
        return g_v_closed(n, a, b, m)
    prefactor = Fraction(math.factorial(size) * m ** math.comb(a, 2) * phi(a)) / (
        m ** n * math.prod(math.factorial(b + m * j) for j in range(n + a))
    )
    value = prefactor * selberg_case_value(n, a, b, m)
    return _exact_int(value, f"g_v_selberg{(n, a, b, m)}")


def v_hook_q_product(n: int, a: int, b: int, m: int) -> QFactored:
    """The hook form lifted to q: constant · ∏_{λ* \\ D} 1/(1 - q^h)."""
    shape = build_v(n, a, b, m)
    factors = tuple((shifted_hook_length(shape.outer, c), -1) for c in v_hook_cells(n, a, b, m))
    return QFactored(_v_constant(n, a, shape.size) / math.factorial(shape.size), 0, factors)


# ── M shapes ─────────────────────────────────────────────────────────────────

def triple_product(n: int, a: int, c: int, m: int = 1) -> QFactored:
    """∏_{i<=n, j<=a, k<=c} (1 - q^{m(i+j+k-1)}) / (1 - q^{m(i+j+k-2)})."""
    factors = []
    for i in range(1, n + 1):
        for j in range(1, a + 1):
            for k in range(1, c + 1):
                factors.append((m * (i + j + k - 1), 1))
                factors.append((m * (i + j + k - 2), -1))
    return QFactored(Fraction(1), 0, tuple(factors))


def _m_exponent(shape) -> int:
    """Σ_{(i,j) in λ/(c^a)} (λ'_j - i)."""
    lam_t = conjugate(shape.outer)
    return sum(lam_t.part(j) - i for i, j in shape.cells())


def _m_hook_cells(n: int, a: int, c: int, shape) -> list:
    """Cells of λ outside the block in rows n+1..n+a, columns 1..c."""
    return [
        cell for cell in shape.outer.cells()
        if not (n < cell.row <= n + a and cell.col <= c)
    ]


def s_m_product(n: int, a: int, b: int, c: int, d: int, m: int) -> QFactored:
    """Product form of Σ_{SSYT T of M(n,a,b,c,d,m)} q^{|T|}."""
    _check(n=n, a=a, b=b, c=c, d=d)
    _check_m(m)
    shape = build_m(n, a, b, c, d, m)
    hooks = tuple((hook_length(shape.outer, cell), -1) for cell in _m_hook_cells(n, a, c, shape))
    return QFactored(Fraction(1), _m_exponent(shape), hooks) * triple_product(n, a, c, m)


def s_m_gf(n: int, a: int, b: int, c: int, d: int, m: int, order: int) -> QSeries:
    return expand(s_m_product(n, a, b, c, d, m), order)


def _bounded_pochs(n: int, a: int, b: int, c: int, d: int, big_n: int) -> QFactored:
    result = QFactored.one()
    for i in range(1, b + 1):
        result = result * poch(big_n - a + 1 + i, a)
    for i in range(1, d + 1):
        result = result * poch(big_n + 2 - i, c)
    for i in range(1, n + 1):
        result = result * poch(big_n - n - a - d + 1 + i, n + a + b + c + d)
    return result


def s_m_bounded_factored(n: int, a: int, b: int, c: int, d: int, big_n: int) -> QFactored:
    _check(n=n, a=a, b=b, c=c, d=d, N=big_n)
    return _bounded_pochs(n, a, b, c, d, big_n) * s_m_product(n, a, b, c, d, 1)


def s_m_bounded(n: int, a: int, b: int, c: int, d: int, big_n: int) -> QSeries:
    """Σ q^{|T|} over SSYT of M(n,a,b,c,d,1) with entries <= N, as an exact polynomial."""
    return s_m_bounded_factored(n, a, b, c, d, big_n).as_polynomial()


def s_m_bounded_phi(n: int, a: int, b: int, c: int, d: int, big_n: int) -> QSeries:
    """Same polynomial with the hook and triple products folded into q-superfactorials."""
    _check(n=n, a=a, b=b, c=c, d=d, N=big_n)
    s = n + a + b + c + d
    exponent = _m_exponent(build_m(n, a, b, c, d, 1))
    num = [phi_q(k) for k in (n, a, b, c, d, n + a + c, n + b + d, s)]
    den = [phi_q(k) for k in (a + c, b + d, n + a + b, n + c + d, n + s)]
    value = QFactored.monomial(exponent) * _bounded_pochs(n, a, b, c, d, big_n)
    for f in num:
        value = value * f
    for f in den:
        value = value / f
    return value.as_polynomial()


def chi(n: int, a: int, c: int, cell) -> int:
    """1 on the (n+c)^{n+a} rectangle, 0 elsewhere."""
    return 1 if cell[0] <= n + a and cell[1] <= n + c else 0


def trace_gf_formula(n: int, a: int, b: int, c: int, d: int, m: int, order: int) -> XQSeries:
    """Σ x^{tr(T)} q^{|T|} from the bivariate product, exact through q^order."""
    _check(n=n, a=a, b=b, c=c, d=d)
    _check_m(m)
    shape = build_m(n, a, b, c, d, m)
    prefix = n * a + math.comb(n, 2)
    start = QSeries.monomial(_m_exponent(shape), 1, order)
    result = XQSeries({prefix: start}, order) * expand(triple_product(n, a, c, m), order)
    for cell in _m_hook_cells(n, a, c, shape):
        result = result.divide_by_geometric(chi(n, a, c, cell), hook_length(shape.outer, cell))
    return result


# ── Fixed reverse diagonal ───────────────────────────────────────────────────

def _diag_vector(diag, n: int | None) -> tuple[int, ...]:
    parts = tuple(diag.parts) if isinstance(diag, Partition) else tuple(int(v) for v in diag)
    n = len(parts) if n is None else n
    if len(parts) > n:
        raise InvalidParametersError(f"Diagonal {parts} has more than {n} entries")
    Partition(parts)  # weakly decreasing check
    return parts + (0,) * (n - len(parts))


def fixed_diag_factored(kind: TableauKind | str, lam: Partition, diag, n: int | None = None) -> tuple[QFactored, QSeries]:
    """(product part, alternant part) of the fixed-diagonal generating function."""
    kind = TableauKind.parse(kind) if isinstance(kind, str) else kind
    nu = _diag_vector(diag, n)
    n = len(nu)
    lam_parts = lam.padded(n)
    denominator = QFactored.one()
    for j, part in enumerate(lam_parts, 1):
        denominator = denominator * poch(1, part + n - j)
    if kind is TableauKind.RPP:
        nu = tuple(x + y for x, y in zip(nu, delta(n).padded(n)))
        outer = add(delta(n + 1), lam)
        exponent = -nn(outer) + sum(nu)
    elif kind is TableauKind.SSYT:
        exponent = sum(nu)
    else:
        exponent = (
            sum(nu) + nn(conjugate(lam)) - nn(lam) + n * lam.size + math.comb(n + 1, 3)
        )
    return QFactored.monomial(exponent) / denominator, alternant(lam, nu)


def fixed_diag_rhs(kind: TableauKind | str, lam: Partition, diag, order: int, n: int | None = None) -> QSeries:
    """Right-hand side of the fixed-diagonal identities, exact through q^order.

    ``diag`` is the reverse diagonal: μ for RPP (the alternant is taken at
    μ + δ_n) and ν for SSYT and RST.
    """
    product, alt = fixed_diag_factored(kind, lam, diag, n)
    if alt.is_zero():
        return QSeries.zero(order)
    return (expand(product, order - alt.low) * alt).truncate(order)


# ── Boxed plane partitions ───────────────────────────────────────────────────

def macmahon_box(a: int, b: int, c: int) -> QFactored:
    _check(a=a, b=b, c=c)
    return triple_product(a, b, c)


def ssyt_box(a: int, b: int, c: int) -> QFactored:
    """Rectangle b^a with entries <= c + a - 1 and strict columns."""
    return QFactored.monomial(b * math.comb(a, 2)) * macmahon_box(a, b, c)


def macmahon_triple_identity(n: int, a: int, c: int) -> tuple[QFactored, QFactored]:
    """(triple product, Φ_q(a)Φ_q(c)Φ_q(n)Φ_q(n+a+c)/(Φ_q(a+c)Φ_q(n+a)Φ_q(n+c)))."""
    _check(n=n, a=a, c=c)
    ratio = phi_q(a) * phi_q(c) * phi_q(n) * phi_q(n + a + c) / (phi_q(a + c) * phi_q(n + a) * phi_q(n + c))
    return triple_product(n, a, c), ratio


def macmahon_diagonal_reduction(a: int, b: int, c: int) -> QSeries:
    """Boxed plane partitions through the RPP fixed-diagonal identity on δ_{a+b+1}."""
    _check(a=a, b=b, c=c)
    n = a + b
    product, alt = fixed_diag_factored(TableauKind.RPP, Partition(), (c,) * b + (0,) * a, n)
    return exact_product(product * QFactored.monomial(-c * math.comb(b + 1, 2)), alt)

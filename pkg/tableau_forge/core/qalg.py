"""
tableau_forge/core/qalg.py – Exact q-series and factored q-products.

QSeries     truncated Laurent series in q; ``order`` is the largest exponent
            known exactly (None for an exact Laurent polynomial).
XQSeries    polynomial in x with QSeries coefficients sharing one order.
QFactored   r · q^e · ∏ (1-q^k)^{m_k}; exact product formulas live here and
            expand to QSeries on demand.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator

from tableau_forge.core.errors import (
    DivergentLimitError,
    NonIntegerResultError,
    TruncationError,
)

Number = int | Fraction


def _norm(c: Number) -> Number:
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


def _min_order(*orders: int | None) -> int | None:
    known = [o for o in orders if o is not None]
    return min(known) if known else None


def _format_coeff(c: Number, body: str) -> str:
    """Render c·body, with body '' for the constant term."""
    if not body:
        return str(c)
    if c == 1:
        return body
    if c == -1:
        return "-" + body
    return f"{c} {body}"


def _q_power(e: int) -> str:
    if e == 0:
        return ""
    return "q" if e == 1 else f"q^{e}"


def _join_terms(terms: list[str], order: int | None) -> str:
    text = terms[0] if terms else "0"
    for t in terms[1:]:
        text += f" - {t[1:]}" if t.startswith("-") else f" + {t}"
    if order is not None:
        text += f" (+O(q^{order + 1}))"
    return text


# ── QSeries ──────────────────────────────────────────────────────────────────

class QSeries:
    """Truncated Laurent series Σ c_k q^k, exact through exponent ``order``."""

    __slots__ = ("low", "coeffs", "order")

    def __init__(self, coeffs: Iterable[Number] = (), low: int = 0, order: int | None = None):
        coeffs = [_norm(c) for c in coeffs]
        if order is not None:
            del coeffs[max(order - low + 1, 0):]
        start = 0
        while start < len(coeffs) and coeffs[start] == 0:
            start += 1
        coeffs = coeffs[start:]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self.low = low + start if coeffs else 0
        self.coeffs = tuple(coeffs)
        self.order = order

    # ── constructors ─────────────────────────────────────────────────────

    @classmethod
    def monomial(cls, exponent: int, coeff: Number = 1, order: int | None = None) -> "QSeries":
        return cls([coeff], exponent, order)

    @classmethod
    def from_terms(cls, terms: dict[int, Number], order: int | None = None) -> "QSeries":
        terms = {e: c for e, c in terms.items() if c != 0}
        if not terms:
            return cls((), 0, order)
        lo, hi = min(terms), max(terms)
        return cls([terms.get(e, 0) for e in range(lo, hi + 1)], lo, order)

    @classmethod
    def zero(cls, order: int | None = None) -> "QSeries":
        return cls((), 0, order)

    # ── access ───────────────────────────────────────────────────────────

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def exact(self) -> bool:
        return self.order is None

    @property
    def degree(self) -> int | None:
        return self.low + len(self.coeffs) - 1 if self.coeffs else None

    def _raw(self, k: int) -> Number:
        i = k - self.low
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def coefficient(self, k: int) -> Number:
        if self.order is not None and k > self.order:
            raise TruncationError(f"Coefficient of q^{k} requested from a series exact only through q^{self.order}")
        return self._raw(k)

    def terms(self) -> Iterator[tuple[int, Number]]:
        for i, c in enumerate(self.coeffs):
            if c:
                yield self.low + i, c

    def _effective_low(self) -> int | None:
        if self.coeffs:
            return self.low
        return None if self.order is None else self.order + 1

    def truncate(self, order: int) -> "QSeries":
        return QSeries(self.coeffs, self.low, _min_order(order, self.order))

    def shift(self, e: int) -> "QSeries":
        """Multiply by q^e."""
        return QSeries(self.coeffs, self.low + e, None if self.order is None else self.order + e)

    def evaluate(self, q: Number) -> Number:
        if self.order is not None:
            raise TruncationError("Only exact Laurent polynomials can be evaluated at a point")
        return _norm(sum((Fraction(c) * Fraction(q) ** e for e, c in self.terms()), Fraction(0)))

    # ── arithmetic ───────────────────────────────────────────────────────

    def __neg__(self) -> "QSeries":
        return QSeries([-c for c in self.coeffs], self.low, self.order)

    def __add__(self, other) -> "QSeries":
        if isinstance(other, (int, Fraction)):
            other = QSeries.monomial(0, other)
        if not isinstance(other, QSeries):
            return NotImplemented
        order = _min_order(self.order, other.order)
        terms: dict[int, Number] = dict(self.terms())
        for e, c in other.terms():
            terms[e] = terms.get(e, 0) + c
        if order is not None:
            terms = {e: c for e, c in terms.items() if e <= order}
        return QSeries.from_terms(terms, order)

    __radd__ = __add__

    def __sub__(self, other) -> "QSeries":
        return self + (-other)

    def __rsub__(self, other) -> "QSeries":
        return (-self) + other

    def __mul__(self, other) -> "QSeries":
        if isinstance(other, (int, Fraction)):
            return QSeries([c * other for c in self.coeffs], self.low, self.order)
        if not isinstance(other, QSeries):
            return NotImplemented
        if (self.is_zero() and self.exact) or (other.is_zero() and other.exact):
            return QSeries.zero()
        candidates = []
        if other.order is not None:
            candidates.append(self._effective_low() + other.order)
        if self.order is not None:
            candidates.append(other._effective_low() + self.order)
        order = _min_order(*candidates)
        if self.is_zero() or other.is_zero():
            return QSeries.zero(order)
        low = self.low + other.low
        length = len(self.coeffs) + len(other.coeffs) - 1
        if order is not None:
            length = min(length, order - low + 1)
        if length <= 0:
            return QSeries.zero(order)
        out = [0] * length
        for i, a in enumerate(self.coeffs):
            if i >= length:
                break
            if not a:
                continue
            for j, b in enumerate(other.coeffs[: length - i]):
                out[i + j] += a * b
        return QSeries(out, low, order)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "QSeries":
        result = QSeries.monomial(0)
        for _ in range(k):
            result = result * self
        return result

    def inverse(self, order: int) -> "QSeries":
        """1/f through q^order for f with a unit constant term."""
        if self.low != 0 or not self.coeffs or self.coeffs[0] not in (1, -1):
            raise NonIntegerResultError("Series inverse needs constant term ±1 and no negative powers")
        order = _min_order(order, self.order)
        c0 = self.coeffs[0]
        inv = [0] * (order + 1)
        inv[0] = c0
        for k in range(1, order + 1):
            acc = sum(self._raw(j) * inv[k - j] for j in range(1, min(k, len(self.coeffs) - 1) + 1))
            inv[k] = -acc * c0
        return QSeries(inv, 0, order)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = QSeries.monomial(0, other)
        if not isinstance(other, QSeries):
            return NotImplemented
        horizon = _min_order(self.order, other.order)
        if horizon is None:
            return self.low == other.low and self.coeffs == other.coeffs
        lows = [s.low for s in (self, other) if s.coeffs]
        if not lows:
            return True
        return all(self._raw(k) == other._raw(k) for k in range(min(lows), horizon + 1))

    __hash__ = None

    def __repr__(self) -> str:
        return f"QSeries({self})"

    def __str__(self) -> str:
        return _join_terms([_format_coeff(c, _q_power(e)) for e, c in self.terms()], self.order)


# ── XQSeries ─────────────────────────────────────────────────────────────────

class XQSeries:
    """Σ_d x^d F_d(q) with every F_d exact through the same q-order."""

    __slots__ = ("parts", "order")

    def __init__(self, parts: dict[int, QSeries], order: int | None = None):
        order = _min_order(order, *(f.order for f in parts.values()))
        cleaned = {}
        for d, f in parts.items():
            f = f if order is None else f.truncate(order)
            if not f.is_zero():
                cleaned[d] = QSeries(f.coeffs, f.low, order)
        self.parts = dict(sorted(cleaned.items()))
        self.order = order

    @classmethod
    def from_qseries(cls, f: QSeries, x_degree: int = 0) -> "XQSeries":
        return cls({x_degree: f}, f.order)

    def coefficient(self, d: int, k: int) -> Number:
        if self.order is not None and k > self.order:
            raise TruncationError(f"Coefficient of q^{k} requested beyond q^{self.order}")
        f = self.parts.get(d)
        return 0 if f is None else f._raw(k)

    def x_degrees(self) -> list[int]:
        return list(self.parts)

    def at_x_one(self) -> QSeries:
        total = QSeries.zero(self.order)
        for f in self.parts.values():
            total = total + f
        return total

    def __add__(self, other: "XQSeries") -> "XQSeries":
        order = _min_order(self.order, other.order)
        parts = dict(self.parts)
        for d, f in other.parts.items():
            parts[d] = parts[d] + f if d in parts else f
        return XQSeries(parts, order)

    def __mul__(self, other) -> "XQSeries":
        if isinstance(other, QSeries):
            other = XQSeries.from_qseries(other)
        if not isinstance(other, XQSeries):
            return NotImplemented
        order = _min_order(self.order, other.order)
        parts: dict[int, QSeries] = {}
        for d1, f in self.parts.items():
            for d2, g in other.parts.items():
                prod = f * g
                parts[d1 + d2] = parts[d1 + d2] + prod if d1 + d2 in parts else prod
        return XQSeries(parts, order)

    def times_monomial(self, x_degree: int, q_exponent: int) -> "XQSeries":
        return XQSeries({d + x_degree: f.shift(q_exponent) for d, f in self.parts.items()}, self.order)

    def divide_by_geometric(self, x_degree: int, h: int) -> "XQSeries":
        """Multiply by 1/(1 - x^{x_degree} q^h), h >= 1, within the q-order."""
        if self.order is None:
            raise TruncationError("Geometric division needs a finite q-order")
        if h < 1:
            raise ValueError(f"h must be positive, got {h}")
        if x_degree == 0:
            geo = QSeries([1 if k % h == 0 else 0 for k in range(self.order + 1)], 0, self.order)
            return XQSeries({d: f * geo for d, f in self.parts.items()}, self.order)
        if not self.parts:
            return XQSeries({}, self.order)
        lowest = min(f.low for f in self.parts.values())
        # each extra power of x costs at least q^h
        last = max(self.parts) + x_degree * ((self.order - lowest) // h + 1)
        new: dict[int, QSeries] = {}
        for d in range(min(self.parts), last + 1):
            f = self.parts.get(d, QSeries.zero(self.order))
            prev = new.get(d - x_degree)
            if prev is not None:
                f = f + prev.shift(h).truncate(self.order)
            if not f.is_zero():
                new[d] = f
        return XQSeries(new, self.order)

    def __eq__(self, other) -> bool:
        if not isinstance(other, XQSeries):
            return NotImplemented
        for d in set(self.parts) | set(other.parts):
            mine = self.parts.get(d) or QSeries.zero(self.order)
            theirs = other.parts.get(d) or QSeries.zero(other.order)
            if mine != theirs:
                return False
        return True

    __hash__ = None

    def __repr__(self) -> str:
        return f"XQSeries({self})"

    def __str__(self) -> str:
        items = []
        for d, f in self.parts.items():
            for e, c in f.terms():
                items.append((e, d, c))
        items.sort()
        terms = []
        for e, d, c in items:
            x = "" if d == 0 else ("x" if d == 1 else f"x^{d}")
            body = " ".join(p for p in (x, _q_power(e)) if p)
            terms.append(_format_coeff(c, body))
        return _join_terms(terms, self.order)


# ── QFactored ────────────────────────────────────────────────────────────────

@dataclass(frozen=True)
class QFactored:
    """prefactor · q^q_exponent · ∏ (1-q^k)^m over ``factors`` = ((k, m), ...)."""

    prefactor: Fraction = Fraction(1)
    q_exponent: int = 0
    factors: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        merged: dict[int, int] = {}
        for k, m in self.factors:
            if k < 1:
                raise ValueError(f"Factor (1-q^{k}) must have k >= 1")
            merged[k] = merged.get(k, 0) + m
        prefactor = Fraction(self.prefactor)
        if prefactor == 0:
            object.__setattr__(self, "q_exponent", 0)
            merged = {}
        object.__setattr__(self, "prefactor", prefactor)
        object.__setattr__(self, "factors", tuple(sorted((k, m) for k, m in merged.items() if m)))

    @classmethod
    def one(cls) -> "QFactored":
        return cls()

    @classmethod
    def zero(cls) -> "QFactored":
        return cls(Fraction(0))

    @classmethod
    def monomial(cls, exponent: int, coeff: Number = 1) -> "QFactored":
        return cls(Fraction(coeff), exponent)

    @classmethod
    def cyclotomic(cls, k: int, m: int = 1) -> "QFactored":
        """(1-q^k)^m."""
        return cls(Fraction(1), 0, ((k, m),))

    def is_zero(self) -> bool:
        return self.prefactor == 0

    @property
    def net_degree(self) -> int:
        return sum(m for _, m in self.factors)

    def __mul__(self, other) -> "QFactored":
        if isinstance(other, (int, Fraction)):
            return QFactored(self.prefactor * other, self.q_exponent, self.factors)
        if not isinstance(other, QFactored):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return QFactored.zero()
        return QFactored(
            self.prefactor * other.prefactor,
            self.q_exponent + other.q_exponent,
            self.factors + other.factors,
        )

    __rmul__ = __mul__

    def inverse(self) -> "QFactored":
        if self.is_zero():
            raise ZeroDivisionError("Inverse of the zero product")
        return QFactored(1 / self.prefactor, -self.q_exponent, tuple((k, -m) for k, m in self.factors))

    def __truediv__(self, other) -> "QFactored":
        if isinstance(other, (int, Fraction)):
            return QFactored(self.prefactor / Fraction(other), self.q_exponent, self.factors)
        return self * other.inverse()

    def __pow__(self, e: int) -> "QFactored":
        if e < 0:
            return self.inverse() ** (-e)
        if self.is_zero():
            return QFactored.one() if e == 0 else QFactored.zero()
        return QFactored(self.prefactor ** e, self.q_exponent * e, tuple((k, m * e) for k, m in self.factors))

    def expand(self, order: int) -> QSeries:
        return expand(self, order)

    def evaluate(self, q: Fraction) -> Fraction:
        q = Fraction(q)
        value = self.prefactor * q ** self.q_exponent
        for k, m in self.factors:
            value *= (1 - q ** k) ** m
        return value

    def as_polynomial(self) -> QSeries:
        """Exact Laurent polynomial, dividing out every (1-q^k) denominator."""
        return exact_product(self, QSeries.monomial(0))

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts = [str(self.prefactor), f"q^{self.q_exponent}"]
        parts += [f"(1-q^{k})^{m}" for k, m in self.factors]
        return " · ".join(parts)


def expand(f: QFactored, order: int) -> QSeries:
    """Coefficients of f exact through q^order; 1/(1-q^k) expands geometrically."""
    if f.is_zero() or order < f.q_exponent:
        return QSeries.zero(order)
    size = order - f.q_exponent + 1
    coeffs: list[Number] = [0] * size
    coeffs[0] = _norm(f.prefactor)
    for k, m in f.factors:
        if k >= size:
            continue
        for _ in range(abs(m)):
            if m > 0:
                for i in range(size - 1, k - 1, -1):
                    coeffs[i] -= coeffs[i - k]
            else:
                for i in range(k, size):
                    coeffs[i] += coeffs[i - k]
    return QSeries(coeffs, f.q_exponent, order)


def exact_product(f: QFactored, p: QSeries) -> QSeries:
    """f · p as an exact Laurent polynomial; every denominator must divide out."""
    if not p.exact:
        raise TruncationError("exact_product needs an exact polynomial operand")
    if f.is_zero() or p.is_zero():
        return QSeries.zero()
    coeffs: list[Number] = [c * f.prefactor for c in p.coeffs]
    for k, m in f.factors:
        if m > 0:
            for _ in range(m):
                nxt = coeffs + [0] * k
                for i in range(len(coeffs)):
                    nxt[i + k] -= coeffs[i]
                coeffs = nxt
    for k, m in f.factors:
        if m < 0:
            for _ in range(-m):
                for i in range(k, len(coeffs)):
                    coeffs[i] += coeffs[i - k]
                if len(coeffs) < k or any(coeffs[-k:]):
                    raise NonIntegerResultError(f"{f} times the given polynomial is not a polynomial in q")
                coeffs = coeffs[:-k]
    return QSeries(coeffs, p.low + f.q_exponent)


def limit_q1(f: QFactored, m: int) -> Fraction:
    """lim_{q->1} (q;q)_m · f(q), using (1-q^k)/(1-q) -> k."""
    g = f * poch(1, m)
    if g.is_zero():
        return Fraction(0)
    net = g.net_degree
    if net < 0:
        raise DivergentLimitError(f"(q;q)_{m} · f has a pole of order {-net} at q = 1")
    if net > 0:
        return Fraction(0)
    value = g.prefactor
    for k, mult in g.factors:
        value *= Fraction(k) ** mult
    return value


# ── Named products ───────────────────────────────────────────────────────────

def poch(s: int, k: int) -> QFactored:
    """(q^s; q)_k = ∏_{i<k} (1 - q^{s+i}); zero when a factor is 1 - q^0."""
    if k < 0:
        raise ValueError(f"Pochhammer length must be nonnegative, got {k}")
    sign = 1
    shift = 0
    factors = []
    for i in range(k):
        e = s + i
        if e == 0:
            return QFactored.zero()
        if e < 0:
            # 1 - q^{-j} = -q^{-j} (1 - q^j)
            sign = -sign
            shift += e
            factors.append((-e, 1))
        else:
            factors.append((e, 1))
    return QFactored(Fraction(sign), shift, tuple(factors))


def phi(n: int) -> int:
    """Φ(n) = ∏_{i=1}^{n-1} i!."""
    return math.prod(math.factorial(i) for i in range(1, n))


def gimel(n: int) -> int:
    """∏_{i=1}^{⌊n/2⌋} (n-2i)!."""
    return math.prod(math.factorial(n - 2 * i) for i in range(1, n // 2 + 1))


def odd_double_factorial(n: int) -> int:
    """(2n-1)!! = 1·3·…·(2n-1)."""
    return math.prod(range(1, 2 * n, 2))


def phi_q(n: int) -> QFactored:
    result = QFactored.one()
    for i in range(1, n):
        result = result * poch(1, i)
    return result


def gimel_q(n: int) -> QFactored:
    result = QFactored.one()
    for i in range(1, n // 2 + 1):
        result = result * poch(1, n - 2 * i)
    return result

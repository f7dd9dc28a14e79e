"""
tableau_forge/core/shapes.py – Partitions, skew and shifted skew diagrams.

Coordinates are 1-based (row, col). A shifted diagram puts row i in
columns i .. i + λ_i - 1. Every shape exposes ``row_intervals()`` so the
enumeration engines never need to know whether it is shifted.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple

from tableau_forge.core.errors import (
    CellOutsideShapeError,
    InvalidParametersError,
    ParseError,
)


class Cell(NamedTuple):
    row: int
    col: int

    def __str__(self) -> str:
        return f"({self.row},{self.col})"


# ── Partitions ────────────────────────────────────────────────────────────────

@dataclass(frozen=True)
class Partition:
    """Weakly decreasing nonnegative parts; trailing zeros are dropped."""

    parts: tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        for i, p in enumerate(parts):
            if p < 0:
                raise InvalidParametersError(f"Partition parts must be nonnegative, got {parts}")
            if i and p > parts[i - 1]:
                raise InvalidParametersError(f"Partition parts must be weakly decreasing, got {parts}")
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        object.__setattr__(self, "parts", parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def part(self, i: int) -> int:
        """λ_i with the convention λ_i = 0 past the length (1-based)."""
        return self.parts[i - 1] if 1 <= i <= len(self.parts) else 0

    def padded(self, n: int) -> tuple[int, ...]:
        if len(self.parts) > n:
            raise InvalidParametersError(f"{self} has more than {n} parts")
        return self.parts + (0,) * (n - len(self.parts))

    @property
    def size(self) -> int:
        return sum(self.parts)

    def cells(self) -> list[Cell]:
        return [Cell(i, j) for i, p in enumerate(self.parts, 1) for j in range(1, p + 1)]

    def __contains__(self, cell) -> bool:
        i, j = cell
        return i >= 1 and 1 <= j <= self.part(i)

    def contains(self, other: "Partition") -> bool:
        return len(other) <= len(self) and all(o <= self.part(i) for i, o in enumerate(other, 1))

    def __str__(self) -> str:
        return ",".join(str(p) for p in self.parts)


@dataclass(frozen=True)
class StrictPartition(Partition):
    """Strictly decreasing positive parts."""

    def __post_init__(self):
        super().__post_init__()
        for a, b in zip(self.parts, self.parts[1:]):
            if a <= b:
                raise InvalidParametersError(f"Strict partition parts must strictly decrease, got {self.parts}")

    def staircase_decomposition(self) -> tuple[int, Partition]:
        """Return (n, μ) with self = δ_{n+1} + μ and n = length."""
        n = len(self.parts)
        return n, Partition(tuple(p - (n - i) for i, p in enumerate(self.parts)))

    def shifted_cells(self) -> list[Cell]:
        return [Cell(i, j) for i, p in enumerate(self.parts, 1) for j in range(i, i + p)]

    def in_shifted(self, cell) -> bool:
        i, j = cell
        return 1 <= i <= len(self.parts) and i <= j <= self.parts[i - 1] + i - 1


# ── Partition algebra ─────────────────────────────────────────────────────────

def conjugate(p: Partition) -> Partition:
    if not p.parts:
        return Partition()
    return Partition(tuple(sum(1 for part in p.parts if part >= j) for j in range(1, p.parts[0] + 1)))


def delta(n: int) -> Partition:
    """The staircase δ_n = (n-1, n-2, ..., 0)."""
    return Partition(tuple(range(n - 1, -1, -1)))


def add(lam: Partition, mu: Partition) -> Partition:
    n = max(len(lam), len(mu))
    return Partition(tuple(x + y for x, y in zip(lam.padded(n), mu.padded(n))))


def union(lam: Partition, mu: Partition) -> Partition:
    return Partition(tuple(sorted(lam.parts + mu.parts, reverse=True)))


def scale(m: int, lam: Partition) -> Partition:
    if m < 0:
        raise InvalidParametersError(f"Scale factor must be nonnegative, got {m}")
    return Partition(tuple(m * p for p in lam.parts))


def nn(lam: Partition) -> int:
    """n(λ) = Σ (i-1) λ_i."""
    return sum(i * p for i, p in enumerate(lam.parts))


def hook_length(lam: Partition, c) -> int:
    i, j = c
    if c not in lam:
        raise CellOutsideShapeError(c, f"the diagram of ({lam})")
    return lam.part(i) + conjugate(lam).part(j) - i - j + 1


def shifted_hook_length(lam: StrictPartition, c) -> int:
    """Shifted hook with λ = δ_{n+1} + μ; diagonal cells get h(i,i) = λ_i."""
    i, j = c
    if not lam.in_shifted(c):
        raise CellOutsideShapeError(c, f"the shifted diagram of ({lam})")
    n, mu = lam.staircase_decomposition()
    if i == j:
        return lam.part(i)
    if j <= n:
        return lam.part(i) + lam.part(j)
    return hook_length(mu, (i, j - n))


# ── Skew shapes ───────────────────────────────────────────────────────────────

@dataclass(frozen=True)
class SkewShape:
    outer: Partition
    inner: Partition = Partition()

    shifted = False

    def __post_init__(self):
        if not self.outer.contains(self.inner):
            raise InvalidParametersError(f"Inner shape ({self.inner}) is not contained in ({self.outer})")

    @property
    def size(self) -> int:
        return self.outer.size - self.inner.size

    def row_intervals(self) -> tuple[tuple[int, int], ...]:
        """Inclusive column range (start, end) of every row; start > end for empty rows."""
        return tuple((self.inner.part(i) + 1, p) for i, p in enumerate(self.outer.parts, 1))

    def cells(self) -> list[Cell]:
        return [Cell(i, j) for i, (s, e) in enumerate(self.row_intervals(), 1) for j in range(s, e + 1)]

    def __contains__(self, cell) -> bool:
        return cell in self.outer and cell not in self.inner

    def __str__(self) -> str:
        return f"{self.outer}/{self.inner}"


@dataclass(frozen=True)
class ShiftedSkewShape:
    outer: StrictPartition
    inner: StrictPartition = StrictPartition()

    shifted = True

    def __post_init__(self):
        if not self.outer.contains(self.inner):
            raise InvalidParametersError(f"Inner shape ({self.inner})* is not contained in ({self.outer})*")

    @property
    def size(self) -> int:
        return self.outer.size - self.inner.size

    def row_intervals(self) -> tuple[tuple[int, int], ...]:
        return tuple((i + self.inner.part(i), i + p - 1) for i, p in enumerate(self.outer.parts, 1))

    def cells(self) -> list[Cell]:
        return [Cell(i, j) for i, (s, e) in enumerate(self.row_intervals(), 1) for j in range(s, e + 1)]

    def __contains__(self, cell) -> bool:
        return self.outer.in_shifted(cell) and not self.inner.in_shifted(cell)

    def __str__(self) -> str:
        return f"{self.outer}/{self.inner}*"


def canonical_cells(cells: Iterable) -> tuple[Cell, ...]:
    """A CellSet in canonical (row, col) order."""
    return tuple(sorted({Cell(*c) for c in cells}))


# ── Shape families ────────────────────────────────────────────────────────────

def _check_nonnegative(**params):
    for name, value in params.items():
        if value < 0:
            raise InvalidParametersError(f"{name} must be nonnegative, got {value}")


def build_rho(n: int, a: int, b: int, c: int, d: int) -> SkewShape:
    """((n+b+c)^{n+a}, (n+c)^d) / (c+1, c^{a-1}, 1)."""
    _check_nonnegative(n=n, a=a, b=b, c=c, d=d)
    if a < 1:
        raise InvalidParametersError(f"build_rho needs a >= 1, got a={a}")
    outer = Partition((n + b + c,) * (n + a) + (n + c,) * d)
    inner = Partition((c + 1,) + (c,) * (a - 1) + (1,))
    return SkewShape(outer, inner)


def build_v(n: int, a: int, b: int, m: int) -> ShiftedSkewShape:
    """(n+a+b, ..., b+1) + (m-1)δ_{n+a} over the staircase δ_{a+1}, shifted."""
    _check_nonnegative(n=n, a=a, b=b)
    if m < 1:
        raise InvalidParametersError(f"m must be positive, got {m}")
    rows = n + a
    outer = StrictPartition(tuple(rows + b + 1 - i + (m - 1) * (rows - i) for i in range(1, rows + 1)))
    inner = StrictPartition(tuple(range(a, 0, -1)))
    return ShiftedSkewShape(outer, inner)


def build_m(n: int, a: int, b: int, c: int, d: int, m: int) -> SkewShape:
    """((n+c+b)^{n+a} + (m-1)δ_{n+a}) ∪ ν' over (c^a), with ν = (d^{n+c}) + (m-1)δ_{n+c}."""
    _check_nonnegative(n=n, a=a, b=b, c=c, d=d)
    if m < 1:
        raise InvalidParametersError(f"m must be positive, got {m}")
    top = Partition(tuple(n + c + b + (m - 1) * (n + a - i) for i in range(1, n + a + 1)))
    nu = Partition(tuple(d + (m - 1) * (n + c - j) for j in range(1, n + c + 1)))
    return SkewShape(union(top, conjugate(nu)), Partition((c,) * a))


def d_region(n: int, a: int | None = None) -> tuple[Cell, ...]:
    """{(i, n+j) : 1 <= i <= j <= a}; a defaults to n."""
    a = n if a is None else a
    return canonical_cells((i, n + j) for j in range(1, a + 1) for i in range(1, j + 1))


# ── Enumeration ───────────────────────────────────────────────────────────────

def partitions_of(size: int, largest: int | None = None) -> Iterator[Partition]:
    """All partitions of ``size`` in reverse lexicographic order."""
    largest = size if largest is None else largest
    if size == 0:
        yield Partition()
        return
    for first in range(min(size, largest), 0, -1):
        for rest in partitions_of(size - first, first):
            yield Partition((first,) + rest.parts)


def strict_partitions_of(size: int) -> Iterator[StrictPartition]:
    for p in partitions_of(size):
        if all(a > b for a, b in zip(p.parts, p.parts[1:])):
            yield StrictPartition(p.parts)


def subpartitions(lam: Partition) -> Iterator[Partition]:
    """Every μ ⊆ λ, the empty partition first."""
    def extend(i: int, cap: int, prefix: tuple[int, ...]):
        yield Partition(prefix)
        if i > len(lam):
            return
        for p in range(1, min(cap, lam.part(i)) + 1):
            yield from extend(i + 1, p, prefix + (p,))

    yield from extend(1, lam.part(1), ())


# ── Text forms ────────────────────────────────────────────────────────────────

def parse_partition(text: str) -> Partition:
    text = text.strip()
    if not text:
        return Partition()
    try:
        parts = tuple(int(tok) for tok in text.split(","))
    except ValueError:
        raise ParseError(f"Not a partition: {text!r}") from None
    return Partition(parts)


def ascii_diagram(shape: SkewShape | ShiftedSkewShape) -> str:
    """'#' for cells of the shape, '.' for removed inner cells, shifted rows indented."""
    lines = []
    for i, p in enumerate(shape.outer.parts, 1):
        offset = i - 1 if shape.shifted else 0
        inner = shape.inner.part(i)
        lines.append(" " * offset + "." * inner + "#" * (p - inner))
    return "\n".join(lines)

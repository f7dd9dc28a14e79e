"""
tableau_forge/core/excited.py – Excited diagrams and the skew hook length formula.

An excited move replaces a cell (i,j) of D by (i+1,j+1) when that cell lies in
the outer shape and none of (i,j+1), (i+1,j), (i+1,j+1) is in D. E(λ/μ) is the
closure of the inner diagram μ under such moves.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from fractions import Fraction

from tableau_forge import config as cfg
from tableau_forge.core.errors import CapExceededError, NonIntegerResultError
from tableau_forge.core.qalg import QFactored, QSeries, expand, limit_q1
from tableau_forge.core.shapes import Cell, SkewShape, canonical_cells, conjugate, hook_length
from tableau_forge.utils.logger import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True)
class ExcitedFamily:
    shape: SkewShape
    diagrams: tuple[tuple[Cell, ...], ...]

    def __len__(self) -> int:
        return len(self.diagrams)

    def __iter__(self):
        return iter(self.diagrams)


def _moves(diagram: tuple[Cell, ...], shape: SkewShape):
    occupied = set(diagram)
    for cell in diagram:
        i, j = cell
        target = Cell(i + 1, j + 1)
        if target not in shape.outer:
            continue
        if (i, j + 1) in occupied or (i + 1, j) in occupied or target in occupied:
            continue
        yield canonical_cells((occupied - {cell}) | {target})


def excited_diagrams(shape: SkewShape, cap: int | None = None) -> ExcitedFamily:
    """Breadth-first closure of the inner diagram under excited moves."""
    cap = cfg.EXCITED_CAP if cap is None else cap
    start = canonical_cells(shape.inner.cells())
    seen = {start}
    queue = deque([start])
    while queue:
        diagram = queue.popleft()
        for nxt in _moves(diagram, shape):
            if nxt not in seen:
                seen.add(nxt)
                if len(seen) > cap:
                    raise CapExceededError(f"Excited diagrams of {shape}", len(seen), cap)
                queue.append(nxt)
    logger.debug("[EXCITED] |E(%s)| = %d", shape, len(seen))
    return ExcitedFamily(shape, tuple(sorted(seen)))


def format_diagram(diagram: tuple[Cell, ...]) -> str:
    return " ".join(str(c) for c in diagram)


def _complement(shape: SkewShape, diagram) -> list[Cell]:
    occupied = set(diagram)
    return [c for c in shape.outer.cells() if c not in occupied]


def naruse_terms(shape: SkewShape) -> list[Fraction]:
    """Per-diagram summands ∏_{λ \\ D} 1/h_λ."""
    hooks = {c: hook_length(shape.outer, c) for c in shape.outer.cells()}
    return [
        Fraction(1, math.prod(hooks[c] for c in _complement(shape, d)))
        for d in excited_diagrams(shape)
    ]


def naruse_count(shape: SkewShape) -> int:
    """f^{λ/μ} = |λ/μ|! Σ_D ∏_{λ \\ D} 1/h_λ(i,j)."""
    total = math.factorial(shape.size) * sum(naruse_terms(shape), Fraction(0))
    if total.denominator != 1:
        raise NonIntegerResultError(f"Hook sum for {shape} evaluated to {total}")
    return total.numerator


def naruse_q_terms(shape: SkewShape) -> list[QFactored]:
    """Per-diagram summands ∏_{λ \\ D} q^{λ'_j - i} / (1 - q^{h_λ(i,j)})."""
    lam = shape.outer
    lam_t = conjugate(lam)
    terms = []
    for d in excited_diagrams(shape):
        cells = _complement(shape, d)
        exponent = sum(lam_t.part(j) - i for i, j in cells)
        factors = tuple((hook_length(lam, c), -1) for c in cells)
        terms.append(QFactored(Fraction(1), exponent, factors))
    return terms


def naruse_q_series(shape: SkewShape, order: int) -> QSeries:
    total = QSeries.zero(order)
    for term in naruse_q_terms(shape):
        total = total + expand(term, order)
    return total


def naruse_limit_count(shape: SkewShape) -> int:
    """Σ_D lim_{q->1} (q;q)_{|λ/μ|} · (q-summand); equals f^{λ/μ}."""
    total = sum((limit_q1(t, shape.size) for t in naruse_q_terms(shape)), Fraction(0))
    if total.denominator != 1:
        raise NonIntegerResultError(f"q -> 1 limit of the hook sum for {shape} is {total}")
    return total.numerator

"""
tableau_forge/core/oracle.py – Brute-force ground truth.

Counting standard Young tableaux:
  * downset DP over per-row filled-prefix lengths (any shape)
  * corner-removal recursion on the outer partition (unshifted skew shapes)

Weighted fillings (SSYT / RPP / RST) are enumerated row by row with the
previous row as memo key, pruned against a remaining-weight budget.
"""

from __future__ import annotations

import enum
from collections import Counter
from functools import cache
from typing import Sequence

from tableau_forge import config as cfg
from tableau_forge.core.errors import (
    CapExceededError,
    EngineMismatchError,
    InfeasibleDiagonalError,
    InvalidParametersError,
)
from tableau_forge.core.qalg import QSeries, XQSeries
from tableau_forge.core.shapes import (
    ShiftedSkewShape,
    SkewShape,
    StrictPartition,
    build_m,
)
from tableau_forge.utils.logger import get_logger

logger = get_logger(__name__)

Shape = SkewShape | ShiftedSkewShape


class TableauKind(str, enum.Enum):
    SSYT = "ssyt"   # rows weak, columns strict
    RPP = "rpp"     # rows weak, columns weak
    RST = "rst"     # rows strict, columns weak

    @property
    def strict_rows(self) -> bool:
        return self is TableauKind.RST

    @property
    def strict_cols(self) -> bool:
        return self is TableauKind.SSYT

    @classmethod
    def parse(cls, text: str) -> "TableauKind":
        try:
            return cls(text.strip().lower())
        except ValueError:
            raise InvalidParametersError(f"Unknown tableau kind {text!r}; expected ssyt, rpp or rst") from None


def _check_cap(what: str, size: int, cap: int):
    if size > cap:
        raise CapExceededError(what, size, cap)


# ── Standard Young tableaux ──────────────────────────────────────────────────

def count_syt_downset(shape: Shape) -> int:
    """Linear extensions of the cell poset via DP over downsets."""
    intervals = shape.row_intervals()
    lengths = tuple(max(e - s + 1, 0) for s, e in intervals)

    @cache
    def extensions(filled: tuple[int, ...]) -> int:
        if filled == lengths:
            return 1
        total = 0
        for i, (s, e) in enumerate(intervals):
            c = s + filled[i]
            if c > e:
                continue
            if i:
                ps, pe = intervals[i - 1]
                if ps + filled[i - 1] <= c <= pe:
                    continue  # cell above still empty
            total += extensions(filled[:i] + (filled[i] + 1,) + filled[i + 1:])
        return total

    return extensions((0,) * len(intervals))


def count_syt_corners(shape: SkewShape) -> int:
    """Remove a corner of the outer shape that is not in the inner shape, recursively."""
    if shape.shifted:
        raise InvalidParametersError("Corner-removal recursion is defined for unshifted skew shapes only")
    length = len(shape.outer)
    inner = shape.inner.padded(length)

    @cache
    def count(lam: tuple[int, ...]) -> int:
        if lam == inner:
            return 1
        total = 0
        for i, p in enumerate(lam):
            below = lam[i + 1] if i + 1 < length else 0
            if p > below and p > inner[i]:
                total += count(lam[:i] + (p - 1,) + lam[i + 1:])
        return total

    return count(shape.outer.padded(length))


def count_syt(shape: Shape, cap: int | None = None, cross_check: bool = True) -> int:
    """|SYT(shape)|; unshifted shapes are counted twice and must agree."""
    _check_cap(f"Shape {shape}", shape.size, cfg.CELL_CAP if cap is None else cap)
    count = count_syt_downset(shape)
    if cross_check and not shape.shifted:
        other = count_syt_corners(shape)
        if other != count:
            raise EngineMismatchError(f"SYT count of {shape}: downset DP gives {count}, corner recursion gives {other}")
    logger.debug("[ORACLE] f^(%s) = %d", shape, count)
    return count


# ── Weighted fillings ────────────────────────────────────────────────────────

def _fillings(
    shape: Shape,
    kind: TableauKind,
    max_entry: int | None,
    budget: int | None,
    pins: dict[tuple[int, int], int] | None = None,
    trace_cells: frozenset = frozenset(),
) -> Counter:
    """Counter {(|T|, trace): multiplicity} over fillings with |T| <= budget."""
    if max_entry is None and budget is None:
        raise InvalidParametersError("Either a weight budget or a maximal entry is required")
    pins = pins or {}
    intervals = shape.row_intervals()
    row_gap = 1 if kind.strict_rows else 0
    col_gap = 1 if kind.strict_cols else 0

    def lower(c: int, left: int | None, above_row, above_start: int) -> int:
        lo = 0
        if left is not None:
            lo = left + row_gap
        if above_row is not None and above_start <= c < above_start + len(above_row):
            lo = max(lo, above_row[c - above_start] + col_gap)
        return lo

    # minimal weight of rows i.. taken on their own
    min_rest = [0] * (len(intervals) + 1)
    for start in range(len(intervals) - 1, -1, -1):
        total, prev = 0, None
        for i in range(start, len(intervals)):
            s, e = intervals[i]
            row, left = [], None
            for c in range(s, e + 1):
                v = pins.get((i + 1, c), lower(c, left, prev, intervals[i - 1][0] if i > start else 0))
                row.append(v)
                left = v
            total += sum(row)
            prev = tuple(row)
        min_rest[start] = total

    def row_fillings(i: int, prev, room):
        s, e = intervals[i]
        above_start = intervals[i - 1][0] if i else 0
        width = e - s + 1
        out = []

        def extend(c: int, row: list, weight: int, trace: int):
            if c > e:
                out.append((tuple(row), weight, trace))
                return
            lo = lower(c, row[-1] if row else None, prev, above_start)
            hi = max_entry
            pin = pins.get((i + 1, c))
            if pin is not None:
                if pin < lo or (hi is not None and pin > hi):
                    return
                lo = hi = pin
            v = lo
            while hi is None or v <= hi:
                remaining = e - c
                # cells to the right are at least v
                bound = weight + v * (remaining + 1) + min_rest[i + 1]
                if room is not None and bound > room:
                    break
                row.append(v)
                extend(c + 1, row, weight + v, trace + (v if (i + 1, c) in trace_cells else 0))
                row.pop()
                v += 1

        if width <= 0:
            out.append(((), 0, 0))
        else:
            extend(s, [], 0, 0)
        return out

    @cache
    def rest(i: int, prev, room) -> Counter:
        if i == len(intervals):
            return Counter({(0, 0): 1})
        total: Counter = Counter()
        for row, w, t in row_fillings(i, prev, room):
            sub = rest(i + 1, row, None if room is None else room - w)
            for (w2, t2), mult in sub.items():
                total[(w + w2, t + t2)] += mult
        return total

    return rest(0, None, budget)


def gf_tableaux(
    shape: Shape,
    kind: TableauKind | str,
    order: int | None = None,
    max_entry: int | None = None,
    cap: int | None = None,
) -> QSeries:
    """Σ q^{|T|} over fillings of ``kind``.

    With ``order`` the result is exact through q^order (entries default to at
    most ``order``). Without it ``max_entry`` is required and the full
    polynomial is returned.
    """
    kind = TableauKind.parse(kind) if isinstance(kind, str) else kind
    _check_cap(f"Shape {shape}", shape.size, cfg.BIG_SHAPE_CELLS if cap is None else cap)
    if order is not None:
        _check_cap("Truncation order", order, cfg.SERIES_WEIGHT_CAP)
        max_entry = order if max_entry is None else max_entry
    counts = _fillings(shape, kind, max_entry, order)
    terms: Counter = Counter()
    for (w, _), mult in counts.items():
        terms[w] += mult
    return QSeries.from_terms(dict(terms), order)


def gf_fixed_diag(
    outer: StrictPartition,
    kind: TableauKind | str,
    rdiag: Sequence[int],
    order: int,
    strict: bool = False,
    max_entry: int | None = None,
) -> QSeries:
    """Σ q^{|T|} over fillings of outer* whose reverse diagonal equals ``rdiag``.

    Entries are capped at ``max_entry`` (default ``order``) or the largest pin.
    """
    kind = TableauKind.parse(kind) if isinstance(kind, str) else kind
    n = len(outer)
    if len(rdiag) != n:
        raise InvalidParametersError(f"rdiag {tuple(rdiag)} must have {n} entries for ({outer})*")
    shape = ShiftedSkewShape(outer)
    _check_cap(f"Shape {shape}", shape.size, cfg.BIG_SHAPE_CELLS)
    _check_cap("Truncation order", order, cfg.SERIES_WEIGHT_CAP)
    pins = {(i, i): int(rdiag[n - i]) for i in range(1, n + 1)}
    if not _diagonal_feasible(shape, kind, pins):
        msg = f"No {kind.value.upper()} of ({outer})* has reverse diagonal {tuple(rdiag)}"
        if strict:
            raise InfeasibleDiagonalError(msg)
        logger.debug("[ORACLE] %s; returning the zero series", msg)
        return QSeries.zero(order)
    max_entry = max([order if max_entry is None else max_entry, *pins.values()])
    counts = _fillings(shape, kind, max_entry, order, pins)
    terms: Counter = Counter()
    for (w, _), mult in counts.items():
        terms[w] += mult
    return QSeries.from_terms(dict(terms), order)


def _diagonal_feasible(shape: ShiftedSkewShape, kind: TableauKind, pins: dict) -> bool:
    """Greedy minimal filling; infeasible iff a pin sits below its forced lower bound."""
    intervals = shape.row_intervals()
    prev: dict[int, int] = {}
    for i, (s, e) in enumerate(intervals, 1):
        row: dict[int, int] = {}
        for c in range(s, e + 1):
            lo = 0
            if c - 1 in row:
                lo = row[c - 1] + (1 if kind.strict_rows else 0)
            if c in prev:
                lo = max(lo, prev[c] + (1 if kind.strict_cols else 0))
            pin = pins.get((i, c))
            if pin is not None and pin < lo:
                return False
            row[c] = lo if pin is None else pin
        prev = row
    return True


def trace_cells(n: int, a: int, b: int, c: int, d: int, m: int) -> frozenset:
    """Cells of M(n,a,b,c,d,m) with col - row = c - a."""
    shape = build_m(n, a, b, c, d, m)
    return frozenset(cell for cell in shape.cells() if cell.col - cell.row == c - a)


def gf_trace(n: int, a: int, b: int, c: int, d: int, m: int, order: int) -> XQSeries:
    """Σ x^{tr(T)} q^{|T|} over SSYT of M(n,a,b,c,d,m), exact through q^order."""
    shape = build_m(n, a, b, c, d, m)
    _check_cap(f"Shape {shape}", shape.size, cfg.BIG_SHAPE_CELLS)
    _check_cap("Truncation order", order, cfg.SERIES_WEIGHT_CAP)
    diag = trace_cells(n, a, b, c, d, m)
    counts = _fillings(shape, TableauKind.SSYT, order, order, trace_cells=diag)
    parts: dict[int, Counter] = {}
    for (w, t), mult in counts.items():
        parts.setdefault(t, Counter())[w] += mult
    return XQSeries({t: QSeries.from_terms(dict(ws), order) for t, ws in parts.items()}, order)


def count_box_rpp(a: int, b: int, c: int) -> QSeries:
    """Σ q^{|T|} over plane partitions inside an a×b×c box, as an exact polynomial."""
    for name, value in (("a", a), ("b", b), ("c", c)):
        if value < 0:
            raise InvalidParametersError(f"{name} must be nonnegative, got {value}")
    _check_cap(f"Box {a}x{b}x{c}", a * b * c, cfg.BOX_CAP)
    shape = SkewShape(build_m(0, a, b, 0, 0, 1).outer)
    counts = _fillings(shape, TableauKind.RPP, c, None)
    terms: Counter = Counter()
    for (w, _), mult in counts.items():
        terms[w] += mult
    return QSeries.from_terms(dict(terms))

"""
tableau_forge/core/parsing.py – Text forms accepted on the command line and in sweep config files.

  shape     "4,3,1/2,1", "2,2/1", "1/" or "3,2" (inner partition optional)
  params    "1,1,2,1,0"
  range     "lo..hi" or a single integer
  config    key = value lines, '#' starts a comment
"""

from __future__ import annotations

from pathlib import Path

from tableau_forge.core.errors import InvalidParametersError, ParseError
from tableau_forge.core.shapes import (
    ShiftedSkewShape,
    SkewShape,
    StrictPartition,
    build_m,
    build_rho,
    build_v,
    parse_partition,
)

FAMILIES = {
    "rho": (("n", "a", "b", "c", "d"), build_rho),
    "v": (("n", "a", "b", "m"), build_v),
    "m": (("n", "a", "b", "c", "d", "m"), build_m),
}


def parse_shape(text: str, shifted: bool = False) -> SkewShape | ShiftedSkewShape:
    outer_text, _, inner_text = text.partition("/")
    try:
        outer, inner = parse_partition(outer_text), parse_partition(inner_text)
        if shifted:
            return ShiftedSkewShape(StrictPartition(outer.parts), StrictPartition(inner.parts))
        return SkewShape(outer, inner)
    except ParseError:
        raise
    except InvalidParametersError as exc:
        raise ParseError(f"Bad shape {text!r}: {exc}") from None


def parse_int(text: str, what: str = "value") -> int:
    try:
        return int(text.strip())
    except ValueError:
        raise ParseError(f"Expected an integer for {what}, got {text!r}") from None


def parse_int_list(text: str, what: str = "values") -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    return tuple(parse_int(tok, what) for tok in text.split(","))


def parse_params(text: str, names: tuple[str, ...]) -> dict[str, int]:
    values = parse_int_list(text, "parameters")
    if len(values) != len(names):
        raise ParseError(f"Expected {len(names)} parameters ({','.join(names)}), got {len(values)} in {text!r}")
    return dict(zip(names, values))


def family_shape(family: str, params_text: str):
    """Build the shape of a named family from its parameter list."""
    try:
        names, builder = FAMILIES[family.lower()]
    except KeyError:
        raise ParseError(f"Unknown family {family!r}; expected one of {', '.join(FAMILIES)}") from None
    params = parse_params(params_text, names)
    return builder(*params.values()), params


def parse_range(text: str, what: str = "range") -> tuple[int, int]:
    text = text.strip()
    if ".." in text:
        lo_text, _, hi_text = text.partition("..")
        lo, hi = parse_int(lo_text, what), parse_int(hi_text, what)
    else:
        lo = hi = parse_int(text, what)
    if lo > hi:
        raise ParseError(f"Empty range {text!r} for {what}")
    return lo, hi


def parse_config(path: str | Path) -> dict[str, str]:
    """Read a sweep config file into raw key/value strings."""
    path = Path(path)
    try:
        lines = path.read_text(encoding="utf-8").splitlines()
    except OSError as exc:
        raise ParseError(f"Cannot read config {path}: {exc}") from None
    entries: dict[str, str] = {}
    for number, raw in enumerate(lines, 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        if not sep or not key.strip():
            raise ParseError(f"{path}:{number}: expected 'key = value', got {raw.strip()!r}")
        key = key.strip()
        if key in entries:
            raise ParseError(f"{path}:{number}: duplicate key {key!r}")
        entries[key] = value.strip()
    return entries

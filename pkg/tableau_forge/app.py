"""
tableau_forge/app.py – tableau-forge command line.

Run from the project root:  python -m tableau_forge <command> ...

Results go to stdout, diagnostics to stderr. Exit codes: 0 success,
1 verification failure, 2 usage, 3 cap exceeded, 4 engine mismatch.
"""

from __future__ import annotations

import argparse
import logging
import math
import sys
from pathlib import Path

from tableau_forge import config as cfg
from tableau_forge.core.errors import (
    EngineMismatchError,
    InvalidParametersError,
    TableauForgeError,
)
from tableau_forge.core.excited import excited_diagrams, format_diagram, naruse_count, naruse_q_series
from tableau_forge.core.formulas import (
    f_rho,
    fixed_diag_rhs,
    g_v_closed,
    s_m_bounded,
    s_m_gf,
    s_m_product,
    trace_gf_formula,
)
from tableau_forge.core.oracle import (
    TableauKind,
    count_syt,
    gf_fixed_diag,
    gf_tableaux,
    gf_trace,
)
from tableau_forge.core.parsing import (
    family_shape,
    parse_config,
    parse_int_list,
    parse_range,
    parse_shape,
)
from tableau_forge.core.qalg import limit_q1
from tableau_forge.core.shapes import ShiftedSkewShape, SkewShape, ascii_diagram, hook_length, shifted_hook_length
from tableau_forge.core.sweep import SweepConfig, run_sweep, write_report
from tableau_forge.theorems import list_theorems
from tableau_forge.utils.logger import get_logger, set_console_level

logger = get_logger(__name__)

COUNT_METHODS = ("oracle", "naruse", "formula")
GF_ENGINES = ("oracle", "formula")


# ---------------------------------------------------------------------------
# Shape selection
# ---------------------------------------------------------------------------

def _add_shape_args(parser: argparse.ArgumentParser, family: bool = True):
    group = parser.add_mutually_exclusive_group(required=True)
    group.add_argument("--skew", metavar="OUTER/INNER", help='skew shape, e.g. "4,3,1/2,1"')
    group.add_argument("--shifted", metavar="OUTER/INNER", help='shifted skew shape, e.g. "5,3,1/2"')
    if family:
        group.add_argument("--family", choices=("rho", "v", "m"), help="named shape family")
        parser.add_argument("--params", default="", help="family parameters, comma separated")


def _resolve_shape(args):
    """(shape, family name or None, family params or None)."""
    if args.skew is not None:
        return parse_shape(args.skew), None, None
    if args.shifted is not None:
        return parse_shape(args.shifted, shifted=True), None, None
    shape, params = family_shape(args.family, args.params)
    return shape, args.family, params


def _methods(text: str, allowed: tuple[str, ...]) -> list[str]:
    methods = [m.strip().lower() for m in text.split(",") if m.strip()]
    bad = [m for m in methods if m not in allowed]
    if bad or not methods:
        raise InvalidParametersError(f"Unknown method(s) {','.join(bad) or text!r}; expected {', '.join(allowed)}")
    return methods


def _agree(values: dict[str, object], what: str):
    """Return the common value of several engines or raise EngineMismatchError."""
    items = list(values.items())
    first_name, first = items[0]
    for name, value in items[1:]:
        if value != first:
            raise EngineMismatchError(f"{what}: {first_name} gives {first}, {name} gives {value}")
    return first


# ---------------------------------------------------------------------------
# count
# ---------------------------------------------------------------------------

def _count_formula(shape, family, params) -> int:
    if family == "rho":
        return f_rho(*params.values())
    if family == "v":
        return g_v_closed(*params.values())
    if family == "m":
        value = limit_q1(s_m_product(*params.values()), shape.size)
        return value.numerator if value.denominator == 1 else value
    if not shape.inner.parts and family is None:
        if shape.shifted:
            hooks = math.prod(shifted_hook_length(shape.outer, c) for c in shape.outer.shifted_cells())
        else:
            hooks = math.prod(hook_length(shape.outer, c) for c in shape.outer.cells())
        return math.factorial(shape.size) // hooks
    raise InvalidParametersError(f"No closed form for {shape}; use --method oracle or naruse")


def cmd_count(args) -> int:
    shape, family, params = _resolve_shape(args)
    values = {}
    for method in _methods(args.method, COUNT_METHODS):
        if method == "oracle":
            values[method] = count_syt(shape)
        elif method == "naruse":
            if shape.shifted:
                raise InvalidParametersError("The excited-diagram formula applies to unshifted skew shapes")
            values[method] = naruse_count(shape)
        else:
            values[method] = _count_formula(shape, family, params)
    print(_agree(values, f"SYT count of {shape}"))
    return 0


# ---------------------------------------------------------------------------
# gf
# ---------------------------------------------------------------------------

def _gf_value(engine: str, args, shape, family, params, kind: TableauKind):
    trunc = args.trunc
    if args.trace:
        if family != "m":
            raise InvalidParametersError("--trace needs --family m")
        if engine == "oracle":
            return gf_trace(*params.values(), trunc)
        return trace_gf_formula(*params.values(), trunc)

    if args.fixed_diag is not None:
        if not isinstance(shape, ShiftedSkewShape) or shape.inner.parts:
            raise InvalidParametersError("--fixed-diag needs a straight --shifted shape δ_{n+1}+λ")
        diag = parse_int_list(args.fixed_diag, "diagonal")
        if engine == "oracle":
            return gf_fixed_diag(shape.outer, kind, diag, trunc, max_entry=args.max_entry)
        n, lam = shape.outer.staircase_decomposition()
        return fixed_diag_rhs(kind, lam, diag, trunc, n)

    if args.bounded is not None:
        if engine == "oracle":
            return gf_tableaux(shape, kind, max_entry=args.bounded)
        if family != "m" or kind is not TableauKind.SSYT or params["m"] != 1:
            raise InvalidParametersError("The bounded formula covers SSYT of --family m with m = 1")
        p = dict(params)
        p.pop("m")
        return s_m_bounded(*p.values(), args.bounded)

    if engine == "oracle":
        return gf_tableaux(shape, kind, order=trunc, max_entry=args.max_entry)
    if kind is not TableauKind.SSYT:
        raise InvalidParametersError(f"No product formula for {kind.value.upper()} on {shape}")
    if family == "m":
        return s_m_gf(*params.values(), trunc)
    if isinstance(shape, SkewShape):
        return naruse_q_series(shape, trunc)
    raise InvalidParametersError(f"No product formula for SSYT of {shape}")


def cmd_gf(args) -> int:
    shape, family, params = _resolve_shape(args)
    kind = TableauKind.parse(args.kind)
    engines = _methods(args.engine, GF_ENGINES)
    if args.max_entry is not None and "formula" in engines:
        raise InvalidParametersError("--max-entry only applies to --engine oracle")
    values = {engine: _gf_value(engine, args, shape, family, params, kind) for engine in engines}
    print(_agree(values, f"{kind.value.upper()} generating function of {shape}"))
    return 0


# ---------------------------------------------------------------------------
# excited / shape / theorems
# ---------------------------------------------------------------------------

def cmd_excited(args) -> int:
    shape = parse_shape(args.skew)
    family = excited_diagrams(shape, cap=args.cap)
    if args.list:
        for diagram in family:
            print(format_diagram(diagram))
    else:
        print(len(family))
    return 0


def cmd_shape(args) -> int:
    shape, _, _ = _resolve_shape(args)
    print(ascii_diagram(shape))
    print(f"{shape.size} cells")
    return 0


def cmd_theorems(args) -> int:
    for theorem in list_theorems():
        aliases = f" [{', '.join(theorem.aliases)}]" if theorem.aliases else ""
        print(f"{theorem.identifier():<20} {','.join(theorem.parameters):<20} {theorem.description}{aliases}")
    return 0


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------

def _sweep_config(args) -> SweepConfig:
    entries = parse_config(args.config) if args.config else {}
    if args.theorem:
        entries["theorem"] = args.theorem
    for item in args.range or []:
        name, sep, value = item.partition("=")
        if not sep:
            raise InvalidParametersError(f"--range expects NAME=LO..HI, got {item!r}")
        parse_range(value, name)
        entries[name.strip()] = value
    for key in ("trunc", "cap", "jobs", "output"):
        value = getattr(args, key)
        if value is not None:
            entries[key] = str(value)
    if args.timings:
        entries["timings"] = "true"
    return SweepConfig.from_mapping(entries)


def cmd_verify(args) -> int:
    config = _sweep_config(args)
    summary = run_sweep(config, progress=not args.no_progress)
    output = config.output or Path(f"{config.theorem}.jsonl")
    write_report(summary, output, config.timings)
    print(summary)
    failure = summary.first_failure
    if failure is not None:
        detail = failure.detail or f"formula {failure.formula} != oracle {failure.oracle}"
        print(f"first failure at {failure.params}: {detail}", file=sys.stderr)
        return 1
    return 0


# ---------------------------------------------------------------------------
# Entry point
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="tableau-forge", description="Exact tableau counts and q-series identities.")
    parser.add_argument("-v", "--verbose", action="count", default=0, help="-v for INFO, -vv for DEBUG on stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="number of standard Young tableaux")
    _add_shape_args(p)
    p.add_argument("--method", default="oracle", help="comma list of oracle, naruse, formula")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("gf", help="generating function of weighted fillings")
    _add_shape_args(p)
    p.add_argument("--kind", default="ssyt", help="ssyt, rpp or rst")
    p.add_argument("--trunc", type=int, default=cfg.DEFAULT_TRUNCATION, help="exact through q^T")
    p.add_argument("--max-entry", type=int, default=None)
    p.add_argument("--bounded", type=int, default=None, metavar="N", help="entries <= N, exact polynomial")
    p.add_argument("--trace", action="store_true", help="mark the trace by x (family m)")
    p.add_argument("--fixed-diag", default=None, metavar="DIAG", help="pin the reverse diagonal")
    p.add_argument("--engine", default="oracle", help="comma list of oracle, formula")
    p.set_defaults(func=cmd_gf)

    p = sub.add_parser("verify", help="formula-vs-oracle sweep over a parameter grid")
    p.add_argument("theorem", nargs="?", help="theorem identifier (see 'theorems')")
    p.add_argument("--config", default=None, help="sweep config file")
    p.add_argument("--range", action="append", metavar="NAME=LO..HI")
    p.add_argument("--trunc", type=int, default=None)
    p.add_argument("--cap", type=int, default=None)
    p.add_argument("--jobs", type=int, default=None)
    p.add_argument("--output", default=None, help="JSON Lines report path")
    p.add_argument("--timings", action="store_true", help="record wall time per tuple")
    p.add_argument("--no-progress", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("excited", help="excited diagrams of a skew shape")
    p.add_argument("--skew", required=True, metavar="OUTER/INNER")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--count", action="store_true", default=True)
    mode.add_argument("--list", action="store_true")
    p.add_argument("--cap", type=int, default=None)
    p.set_defaults(func=cmd_excited)

    p = sub.add_parser("shape", help="draw a shape")
    _add_shape_args(p)
    p.set_defaults(func=cmd_shape)

    p = sub.add_parser("theorems", help="list registered identities")
    p.set_defaults(func=cmd_theorems)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.verbose:
        set_console_level(logging.DEBUG if args.verbose > 1 else logging.INFO)
    logger.debug("[CLI] %s", args)
    try:
        return args.func(args)
    except TableauForgeError as exc:
        logger.info("[CLI] %s: %s", type(exc).__name__, exc)
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code


if __name__ == "__main__":
    sys.exit(main())

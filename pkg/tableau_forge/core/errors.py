"""
tableau_forge/core/errors.py – Exception hierarchy shared by every engine.

Each class also derives from the builtin that best describes it, so callers
can catch ``ValueError`` or ``ArithmeticError`` without importing this module.
``exit_code`` is what the CLI returns when the error escapes a command.
"""


class TableauForgeError(Exception):
    """Base class for all library errors."""

    exit_code = 1


# ── Bad input (exit 2) ────────────────────────────────────────────────────────

class InvalidParametersError(TableauForgeError, ValueError):
    exit_code = 2


class ParseError(InvalidParametersError):
    """A shape, parameter tuple, range or config file could not be parsed."""


class CellOutsideShapeError(TableauForgeError, ValueError):
    exit_code = 2

    def __init__(self, cell, shape_text: str):
        self.cell = tuple(cell)
        super().__init__(f"Cell {self.cell} is not a cell of {shape_text}")


class DimensionMismatchError(TableauForgeError, ValueError):
    exit_code = 2


class TruncationError(TableauForgeError, ValueError):
    """Coefficient requested beyond the exactness horizon of a series."""

    exit_code = 2


class InfeasibleDiagonalError(TableauForgeError, ValueError):
    exit_code = 2


# ── Resource limits ──────────────────────────────────────────────────────────

class CapExceededError(TableauForgeError, RuntimeError):
    exit_code = 3

    def __init__(self, what: str, size: int, cap: int):
        self.size = size
        self.cap = cap
        super().__init__(f"{what} has size {size}, above the configured cap {cap}")


# ── Disagreement / internal consistency ──────────────────────────────────────

class EngineMismatchError(TableauForgeError, RuntimeError):
    exit_code = 4


class NonIntegerResultError(TableauForgeError, RuntimeError):
    """An evaluator that must return an integer (or polynomial) did not."""


class IdentityMismatchError(TableauForgeError, RuntimeError):
    """Two evaluations of the same identity disagree."""


# ── Analysis ─────────────────────────────────────────────────────────────────

class DivergentLimitError(TableauForgeError, ArithmeticError):
    pass


class DivergenceSuspectedError(TableauForgeError, ArithmeticError):
    pass


class PoleError(TableauForgeError, ZeroDivisionError):
    pass

"""
theorems/definitions/hooks.py
Hook length formulas checked shape by shape over every shape of a given size.
"""

import math
from fractions import Fraction

from tableau_forge.core.excited import naruse_count, naruse_q_series
from tableau_forge.core.oracle import TableauKind, count_syt, gf_tableaux
from tableau_forge.core.shapes import (
    ShiftedSkewShape,
    SkewShape,
    hook_length,
    partitions_of,
    shifted_hook_length,
    strict_partitions_of,
    subpartitions,
)
from tableau_forge.theorems.base import BaseTheorem, CheckSettings


def skew_shapes_of(size: int) -> list[SkewShape]:
    """Every λ/μ with |λ| = size and μ ⊆ λ."""
    return [SkewShape(lam, mu) for lam in partitions_of(size) for mu in subpartitions(lam)]


class HookLengthTheorem(BaseTheorem):
    parameters = ("size",)
    description = "|λ|!/∏h for every partition of the given size"

    def identifier(self) -> str:
        return "hook-length"

    def formula(self, params: dict[str, int], settings: CheckSettings) -> list[int]:
        values = []
        for lam in partitions_of(params["size"]):
            hooks = math.prod(hook_length(lam, c) for c in lam.cells())
            values.append(math.factorial(lam.size) // hooks)
        return values

    def oracle(self, params: dict[str, int], settings: CheckSettings) -> list[int]:
        return [count_syt(SkewShape(lam), cap=settings.cap) for lam in partitions_of(params["size"])]


class ShiftedHookLengthTheorem(BaseTheorem):
    parameters = ("size",)
    description = "|λ|!/∏h* for every strict partition of the given size"

    def identifier(self) -> str:
        return "shifted-hook-length"

    def formula(self, params: dict[str, int], settings: CheckSettings) -> list[Fraction]:
        values = []
        for lam in strict_partitions_of(params["size"]):
            hooks = math.prod(shifted_hook_length(lam, c) for c in lam.shifted_cells())
            values.append(Fraction(math.factorial(lam.size), hooks))
        return values

    def oracle(self, params: dict[str, int], settings: CheckSettings) -> list[int]:
        return [
            count_syt(ShiftedSkewShape(lam), cap=settings.cap)
            for lam in strict_partitions_of(params["size"])
        ]


class NaruseTheorem(BaseTheorem):
    parameters = ("size",)
    description = "excited-diagram hook formula for every skew shape λ/μ with |λ| = size"

    def identifier(self) -> str:
        return "naruse"

    def formula(self, params: dict[str, int], settings: CheckSettings) -> list[int]:
        return [naruse_count(shape) for shape in skew_shapes_of(params["size"])]

    def oracle(self, params: dict[str, int], settings: CheckSettings) -> list[int]:
        return [count_syt(shape, cap=settings.cap) for shape in skew_shapes_of(params["size"])]


class NaruseQTheorem(NaruseTheorem):
    description = "q-analogue of the excited-diagram formula against SSYT series"

    def identifier(self) -> str:
        return "naruse-q"

    def formula(self, params: dict[str, int], settings: CheckSettings) -> list:
        return [naruse_q_series(shape, settings.trunc) for shape in skew_shapes_of(params["size"])]

    def oracle(self, params: dict[str, int], settings: CheckSettings) -> list:
        return [
            gf_tableaux(shape, TableauKind.SSYT, order=settings.trunc, cap=settings.cap)
            for shape in skew_shapes_of(params["size"])
        ]

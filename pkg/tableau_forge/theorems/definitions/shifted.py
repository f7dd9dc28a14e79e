"""
theorems/definitions/shifted.py
SYT counts of the shifted V shapes: hook form, factorial form, Selberg route.
"""

from tableau_forge.core.formulas import g_v_closed, g_v_hook, g_v_selberg
from tableau_forge.core.oracle import count_syt
from tableau_forge.core.shapes import build_v
from tableau_forge.theorems.base import BaseTheorem, CheckSettings


class _VTheorem(BaseTheorem):
    parameters = ("n", "a", "b", "m")

    def admissible(self, params: dict[str, int]) -> bool:
        return super().admissible(params) and params["m"] >= 1

    def oracle(self, params: dict[str, int], settings: CheckSettings) -> int:
        return count_syt(build_v(*self.unpack(params)), cap=settings.cap)


class VHookTheorem(_VTheorem):
    description = "shifted hook product over λ* minus the region D"
    aliases = ("thm4.1-hook",)

    def identifier(self) -> str:
        return "v-hook"

    def admissible(self, params: dict[str, int]) -> bool:
        # the D cells sit on the diagonal when n = 0
        return super().admissible(params) and not (params["n"] == 0 and params["a"] > 0)

    def formula(self, params: dict[str, int], settings: CheckSettings) -> int:
        return g_v_hook(*self.unpack(params))


class VClosedTheorem(_VTheorem):
    description = "factorial closed form of the shifted count"
    aliases = ("thm4.1-closed",)

    def identifier(self) -> str:
        return "v-closed"

    def formula(self, params: dict[str, int], settings: CheckSettings) -> int:
        return g_v_closed(*self.unpack(params))


class VSelbergTheorem(_VTheorem):
    description = "shifted count through the Selberg-type integral"

    def identifier(self) -> str:
        return "v-selberg"

    def formula(self, params: dict[str, int], settings: CheckSettings) -> int:
        return g_v_selberg(*self.unpack(params))

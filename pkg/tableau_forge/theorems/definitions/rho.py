"""
theorems/definitions/rho.py
SYT counts of the ρ skew shapes.
"""

from tableau_forge.core.errors import InvalidParametersError
from tableau_forge.core.formulas import f_rho, f_rho_conjecture11, f_rho_intro
from tableau_forge.core.oracle import count_syt
from tableau_forge.core.shapes import build_rho
from tableau_forge.theorems.base import BaseTheorem, CheckSettings


def rho_fits(n: int, a: int, b: int, c: int, d: int) -> bool:
    """True when the inner shape of ρ(n,a,b,c,d) lies inside the outer one."""
    try:
        build_rho(n, a, b, c, d)
    except InvalidParametersError:
        return False
    return True


class RhoTheorem(BaseTheorem):
    parameters = ("n", "a", "b", "c", "d")
    description = "f^ρ(n,a,b,c,d) product formula against the SYT count"
    aliases = ("thm3.1",)

    def identifier(self) -> str:
        return "rho"

    def admissible(self, params: dict[str, int]) -> bool:
        return (
            super().admissible(params)
            and params["a"] >= 1
            and params["c"] >= 1
            and rho_fits(*self.unpack(params))
        )

    def formula(self, params: dict[str, int], settings: CheckSettings) -> int:
        return f_rho(*self.unpack(params))

    def oracle(self, params: dict[str, int], settings: CheckSettings) -> int:
        return count_syt(build_rho(*self.unpack(params)), cap=settings.cap)


class RhoIntroTheorem(RhoTheorem):
    description = "the same count with b and c exchanged in the parametrization"
    aliases = ()

    def identifier(self) -> str:
        return "rho-intro"

    def admissible(self, params: dict[str, int]) -> bool:
        if not (all(v >= 0 for v in params.values()) and params["a"] >= 1 and params["b"] >= 1):
            return False
        n, a, b, c, d = self.unpack(params)
        return rho_fits(n, a, c, b, d)

    def formula(self, params: dict[str, int], settings: CheckSettings) -> int:
        return f_rho_intro(*self.unpack(params))

    def oracle(self, params: dict[str, int], settings: CheckSettings) -> int:
        n, a, b, c, d = self.unpack(params)
        return count_syt(build_rho(n, a, c, b, d), cap=settings.cap)


class RhoSymmetricTheorem(BaseTheorem):
    parameters = ("a", "n")
    description = "closed form of the symmetric case a = b = c = d"
    aliases = ("conj1.1",)

    def identifier(self) -> str:
        return "rho-symmetric"

    def admissible(self, params: dict[str, int]) -> bool:
        return params["a"] >= 1 and params["n"] >= 0

    def formula(self, params: dict[str, int], settings: CheckSettings) -> int:
        return f_rho_conjecture11(params["a"], params["n"])

    def oracle(self, params: dict[str, int], settings: CheckSettings) -> int:
        a, n = params["a"], params["n"]
        return f_rho(n, a, a, a, a)

"""
theorems/definitions/limits.py
q -> 1 limits of product generating functions against SYT counts.
"""

from tableau_forge.core.excited import naruse_limit_count
from tableau_forge.core.formulas import f_rho, g_v_hook, s_m_product, v_hook_q_product
from tableau_forge.core.oracle import count_syt
from tableau_forge.core.qalg import limit_q1
from tableau_forge.core.shapes import build_m, build_rho, build_v
from tableau_forge.theorems.base import BaseTheorem, CheckSettings
from tableau_forge.theorems.definitions.rho import rho_fits


class QLimitTheorem(BaseTheorem):
    parameters = ("n", "a", "b", "c", "d", "m")
    description = "lim (q;q)_{|π|} Σ q^|T| over SSYT of M(n,a,b,c,d,m) equals f^π"

    def identifier(self) -> str:
        return "q-limit"

    def admissible(self, params: dict[str, int]) -> bool:
        return super().admissible(params) and params["m"] >= 1

    def formula(self, params: dict[str, int], settings: CheckSettings):
        shape = build_m(*self.unpack(params))
        return limit_q1(s_m_product(*self.unpack(params)), shape.size)

    def oracle(self, params: dict[str, int], settings: CheckSettings) -> int:
        return count_syt(build_m(*self.unpack(params)), cap=settings.cap)


class QLimitVTheorem(BaseTheorem):
    parameters = ("n", "a", "b", "m")
    description = "lim (q;q)_{|π|} of the q-lifted shifted hook product equals the hook count"

    def identifier(self) -> str:
        return "q-limit-v"

    def admissible(self, params: dict[str, int]) -> bool:
        # same domain as the hook form
        return (
            super().admissible(params)
            and params["m"] >= 1
            and not (params["n"] == 0 and params["a"] > 0)
        )

    def formula(self, params: dict[str, int], settings: CheckSettings):
        size = build_v(*self.unpack(params)).size
        return limit_q1(v_hook_q_product(*self.unpack(params)), size)

    def oracle(self, params: dict[str, int], settings: CheckSettings) -> int:
        return g_v_hook(*self.unpack(params))


class QLimitRhoTheorem(BaseTheorem):
    parameters = ("n", "a", "b", "c", "d")
    description = "q -> 1 limit of the excited-diagram q-sum on ρ(n,a,b,c,d) equals f^ρ"

    def identifier(self) -> str:
        return "q-limit-rho"

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
        return naruse_limit_count(build_rho(*self.unpack(params)))

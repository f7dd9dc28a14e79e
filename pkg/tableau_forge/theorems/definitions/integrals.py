"""
theorems/definitions/integrals.py
Selberg-type evaluations: the q-Selberg product, the half-integer Γ forms
and the ρ integral ledger.
"""

from fractions import Fraction

from tableau_forge import config as cfg
from tableau_forge.core.qcalculus import (
    QPoint,
    SqrtPiRational,
    q_selberg_lhs,
    q_selberg_rhs,
    rho_integral_identity,
    selberg_gamma_forms,
)
from tableau_forge.theorems.base import BaseTheorem, CheckSettings


class QSelbergTheorem(BaseTheorem):
    parameters = ("n", "alpha", "beta", "s", "t")
    default_ranges = {"n": (1, 2), "alpha": (1, 3), "beta": (1, 3), "s": (1, 4), "t": (0, 2)}
    description = "q-Selberg product at a = q^s, b = q^t (q = 1/2) against the finite lattice sum"

    def identifier(self) -> str:
        return "q-selberg"

    def admissible(self, params: dict[str, int]) -> bool:
        return (
            min(params["n"], params["alpha"], params["beta"]) >= 1
            and params["s"] > params["t"] >= 0
        )

    def formula(self, params: dict[str, int], settings: CheckSettings) -> Fraction:
        n, alpha, beta, s, t = self.unpack(params)
        q = cfg.DEFAULT_Q
        return q_selberg_rhs(n, alpha, beta, q ** s, q ** t, q)

    def oracle(self, params: dict[str, int], settings: CheckSettings) -> Fraction:
        n, alpha, beta, s, t = self.unpack(params)
        return q_selberg_lhs(n, alpha, beta, s, t, QPoint(cfg.DEFAULT_Q)).value


class SelbergGammaTheorem(BaseTheorem):
    parameters = ("n", "a", "b", "m")
    description = "Γ-product line against the explicit even/odd case line"

    def identifier(self) -> str:
        return "selberg-gamma"

    def admissible(self, params: dict[str, int]) -> bool:
        return super().admissible(params) and params["n"] >= 1 and params["m"] >= 1

    def formula(self, params: dict[str, int], settings: CheckSettings) -> SqrtPiRational:
        return selberg_gamma_forms(*self.unpack(params))[0]

    def oracle(self, params: dict[str, int], settings: CheckSettings) -> SqrtPiRational:
        return selberg_gamma_forms(*self.unpack(params))[1]


class RhoIntegralsTheorem(BaseTheorem):
    parameters = ("n", "a", "b", "c", "d")
    description = "sum of the four cube integrals against their combined closed form"

    def identifier(self) -> str:
        return "rho-integrals"

    def admissible(self, params: dict[str, int]) -> bool:
        return super().admissible(params) and params["a"] >= 1 and params["c"] >= 1

    def formula(self, params: dict[str, int], settings: CheckSettings) -> Fraction:
        return rho_integral_identity(*self.unpack(params)).closed_form

    def oracle(self, params: dict[str, int], settings: CheckSettings) -> Fraction:
        return rho_integral_identity(*self.unpack(params)).total

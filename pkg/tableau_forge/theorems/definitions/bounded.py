"""
theorems/definitions/bounded.py
Generating functions of SSYT on the M shapes: bounded entries, unbounded,
and with the trace marked by x.
"""

from tableau_forge.core.formulas import (
    s_m_bounded,
    s_m_bounded_phi,
    s_m_gf,
    trace_gf_formula,
)
from tableau_forge.core.oracle import TableauKind, gf_tableaux, gf_trace
from tableau_forge.core.qalg import QSeries, XQSeries
from tableau_forge.core.shapes import build_m
from tableau_forge.theorems.base import BaseTheorem, CheckSettings


class MBoundedTheorem(BaseTheorem):
    parameters = ("n", "a", "b", "c", "d", "N")
    description = "s_π(1,q,...,q^N) for π = M(n,a,b,c,d,1) as an exact polynomial"
    aliases = ("thm5.1",)

    def identifier(self) -> str:
        return "m-bounded"

    def formula(self, params: dict[str, int], settings: CheckSettings) -> QSeries:
        return s_m_bounded(*self.unpack(params))

    def oracle(self, params: dict[str, int], settings: CheckSettings) -> QSeries:
        n, a, b, c, d, big_n = self.unpack(params)
        shape = build_m(n, a, b, c, d, 1)
        return gf_tableaux(shape, TableauKind.SSYT, max_entry=big_n, cap=settings.cap)


class MBoundedPhiTheorem(MBoundedTheorem):
    description = "the bounded polynomial in q-superfactorial form"
    aliases = ()

    def identifier(self) -> str:
        return "m-bounded-phi"

    def formula(self, params: dict[str, int], settings: CheckSettings) -> QSeries:
        return s_m_bounded_phi(*self.unpack(params))


class MSsytTheorem(BaseTheorem):
    parameters = ("n", "a", "b", "c", "d", "m")
    description = "Σ q^|T| over SSYT of M(n,a,b,c,d,m) through q^T"
    aliases = ("mpp4.2",)

    def identifier(self) -> str:
        return "m-ssyt"

    def admissible(self, params: dict[str, int]) -> bool:
        return super().admissible(params) and params["m"] >= 1

    def formula(self, params: dict[str, int], settings: CheckSettings) -> QSeries:
        return s_m_gf(*self.unpack(params), settings.trunc)

    def oracle(self, params: dict[str, int], settings: CheckSettings) -> QSeries:
        shape = build_m(*self.unpack(params))
        return gf_tableaux(shape, TableauKind.SSYT, order=settings.trunc, cap=settings.cap)


class MTraceTheorem(MSsytTheorem):
    description = "Σ x^tr(T) q^|T| over SSYT of M(n,a,b,c,d,m) through q^T"
    aliases = ("thm6.1",)

    def identifier(self) -> str:
        return "m-trace"

    def formula(self, params: dict[str, int], settings: CheckSettings) -> XQSeries:
        return trace_gf_formula(*self.unpack(params), settings.trunc)

    def oracle(self, params: dict[str, int], settings: CheckSettings) -> XQSeries:
        return gf_trace(*self.unpack(params), settings.trunc)

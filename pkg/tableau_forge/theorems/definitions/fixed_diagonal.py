"""
theorems/definitions/fixed_diagonal.py
Fillings of the shifted shape (δ_{n+1}+λ)* with a prescribed reverse diagonal.

Parameters: n (at most three rows), λ = (l1,l2,l3) and the diagonal
partition (v1,v2,v3); parts past n must be zero. For RPP the diagonal is μ,
for SSYT and RST it is ν.
"""

from tableau_forge.core.formulas import fixed_diag_rhs
from tableau_forge.core.oracle import TableauKind, gf_fixed_diag
from tableau_forge.core.qalg import QSeries
from tableau_forge.core.shapes import Partition, StrictPartition, add, delta
from tableau_forge.theorems.base import BaseTheorem, CheckSettings

_ROWS = 3


class _FixedDiagonalTheorem(BaseTheorem):
    kind: TableauKind
    parameters = ("n", "l1", "l2", "l3", "v1", "v2", "v3")
    default_ranges = {"n": (1, _ROWS), **{f"{p}{i}": (0, 3) for p in "lv" for i in range(1, _ROWS + 1)}}

    def _split(self, params: dict[str, int]) -> tuple[int, tuple[int, ...], tuple[int, ...]]:
        n = params["n"]
        lam = tuple(params[f"l{i}"] for i in range(1, _ROWS + 1))
        diag = tuple(params[f"v{i}"] for i in range(1, _ROWS + 1))
        return n, lam, diag

    def admissible(self, params: dict[str, int]) -> bool:
        n, lam, diag = self._split(params)
        if not 1 <= n <= _ROWS or min(lam + diag) < 0:
            return False
        if any(lam[n:]) or any(diag[n:]):
            return False
        decreasing = all(x >= y for x, y in zip(lam, lam[1:])) and all(x >= y for x, y in zip(diag, diag[1:]))
        if not decreasing:
            return False
        if self.kind is not TableauKind.RPP:
            # a repeated diagonal entry admits no filling
            return all(x > y for x, y in zip(diag[:n], diag[1:n]))
        return True

    def formula(self, params: dict[str, int], settings: CheckSettings) -> QSeries:
        n, lam, diag = self._split(params)
        return fixed_diag_rhs(self.kind, Partition(lam), diag[:n], settings.trunc, n)

    def oracle(self, params: dict[str, int], settings: CheckSettings) -> QSeries:
        n, lam, diag = self._split(params)
        outer = StrictPartition(add(delta(n + 1), Partition(lam)).parts)
        return gf_fixed_diag(outer, self.kind, diag[:n], settings.trunc)


class FixedDiagonalRppTheorem(_FixedDiagonalTheorem):
    kind = TableauKind.RPP
    description = "RPP of (δ_{n+1}+λ)* with rdiag = μ"
    aliases = ("thm2.3",)

    def identifier(self) -> str:
        return "fixed-diag-rpp"


class FixedDiagonalSsytTheorem(_FixedDiagonalTheorem):
    kind = TableauKind.SSYT
    description = "SSYT of (δ_{n+1}+λ)* with rdiag = ν"
    aliases = ("cor2.4-ssyt",)

    def identifier(self) -> str:
        return "fixed-diag-ssyt"


class FixedDiagonalRstTheorem(_FixedDiagonalTheorem):
    kind = TableauKind.RST
    description = "RST of (δ_{n+1}+λ)* with rdiag = ν"
    aliases = ("cor2.4-rst",)

    def identifier(self) -> str:
        return "fixed-diag-rst"

"""
theorems/definitions/macmahon.py
Plane partitions in an a×b×c box.
"""

from tableau_forge.core.formulas import macmahon_box, macmahon_diagonal_reduction
from tableau_forge.core.oracle import count_box_rpp
from tableau_forge.core.qalg import QSeries
from tableau_forge.theorems.base import BaseTheorem, CheckSettings


class MacMahonTheorem(BaseTheorem):
    parameters = ("a", "b", "c")
    description = "box product ∏ (1-q^{i+j+k-1})/(1-q^{i+j+k-2}) against enumeration"

    def identifier(self) -> str:
        return "macmahon"

    def formula(self, params: dict[str, int], settings: CheckSettings) -> QSeries:
        return macmahon_box(*self.unpack(params)).as_polynomial()

    def oracle(self, params: dict[str, int], settings: CheckSettings) -> QSeries:
        return count_box_rpp(*self.unpack(params))


class MacMahonDiagonalTheorem(MacMahonTheorem):
    description = "box product recovered from the fixed-diagonal RPP identity"

    def identifier(self) -> str:
        return "macmahon-diagonal"

    def formula(self, params: dict[str, int], settings: CheckSettings) -> QSeries:
        return macmahon_diagonal_reduction(*self.unpack(params))

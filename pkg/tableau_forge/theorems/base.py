"""
tableau_forge/theorems/base.py
Abstract base class for every verifiable identity.
"""

from __future__ import annotations

from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Any, NamedTuple

from tableau_forge import config as cfg


@dataclass(frozen=True)
class CheckSettings:
    trunc: int = cfg.DEFAULT_TRUNCATION
    cap: int | None = None


class CheckResult(NamedTuple):
    formula: Any
    oracle: Any
    passed: bool


class BaseTheorem(ABC):
    """
    Each concrete theorem must implement:
      - identifier()            → registry key used on the command line (e.g. "rho")
      - formula(params, s)      → value of the closed form
      - oracle(params, s)       → value computed independently (usually brute force)

    ``parameters`` names the integer parameters in grid order; sweeps take one
    inclusive range per name, falling back to ``default_ranges``.
    ``aliases`` are extra lookup keys, such as the numbered id of a published result.
    """

    parameters: tuple[str, ...] = ()
    aliases: tuple[str, ...] = ()
    default_ranges: dict[str, tuple[int, int]] = {}
    description: str = ""

    @abstractmethod
    def identifier(self) -> str:
        """Return the registry key (e.g. 'rho', 'm-trace')."""

    @abstractmethod
    def formula(self, params: dict[str, int], settings: CheckSettings) -> Any:
        """Evaluate the closed-form side."""

    @abstractmethod
    def oracle(self, params: dict[str, int], settings: CheckSettings) -> Any:
        """Evaluate the independent side."""

    def admissible(self, params: dict[str, int]) -> bool:
        """True when the tuple lies in the identity's domain. Default: all parameters >= 0."""
        return all(v >= 0 for v in params.values())

    def compare(self, formula: Any, oracle: Any) -> bool:
        return formula == oracle

    def check(self, params: dict[str, int], settings: CheckSettings = CheckSettings()) -> CheckResult:
        formula = self.formula(params, settings)
        oracle = self.oracle(params, settings)
        return CheckResult(formula, oracle, bool(self.compare(formula, oracle)))

    # ── Shared utilities ──────────────────────────────────────────────────────

    def unpack(self, params: dict[str, int]) -> tuple[int, ...]:
        """Parameter values in declaration order."""
        return tuple(params[name] for name in self.parameters)

    @staticmethod
    def render(value: Any) -> Any:
        """Text form used in reports; sequences stay lists."""
        if isinstance(value, (list, tuple)):
            return [BaseTheorem.render(v) for v in value]
        return str(value)

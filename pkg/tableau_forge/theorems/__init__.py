# tableau_forge/theorems/__init__.py
from .base import BaseTheorem, CheckResult, CheckSettings
from .loader import get_theorem, list_theorems

__all__ = ["BaseTheorem", "CheckResult", "CheckSettings", "get_theorem", "list_theorems"]

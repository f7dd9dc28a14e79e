"""
tableau_forge/theorems/loader.py

Auto-discovers all theorem classes in `definitions/` and exposes them by
identifier.

To add a new identity:
  1. Create tableau_forge/theorems/definitions/my_family.py
  2. Define class MyTheorem(BaseTheorem) with identifier(), formula() and oracle()
  3. Done. The loader picks it up automatically.
"""

import importlib
import inspect
import os
import pkgutil

from tableau_forge.core.errors import InvalidParametersError
from tableau_forge.theorems.base import BaseTheorem
from tableau_forge.utils.logger import get_logger

logger = get_logger(__name__)

# ── Theorem registry (populated once at import time) ─────────────────────────
_THEOREMS: dict[str, BaseTheorem] = {}


def _load_theorems() -> dict[str, BaseTheorem]:
    """Import every module in definitions/ and collect BaseTheorem subclasses."""
    theorems: dict[str, BaseTheorem] = {}
    pkg_path = os.path.join(os.path.dirname(__file__), "definitions")
    pkg_name = "tableau_forge.theorems.definitions"

    for _finder, module_name, _is_pkg in pkgutil.iter_modules([pkg_path]):
        full_name = f"{pkg_name}.{module_name}"
        try:
            module = importlib.import_module(full_name)
        except Exception as exc:
            logger.warning("[REGISTRY] Could not import %s: %s", full_name, exc)
            continue

        for _name, obj in inspect.getmembers(module, inspect.isclass):
            if (
                issubclass(obj, BaseTheorem)
                and obj is not BaseTheorem
                and not inspect.isabstract(obj)
                and obj.__module__ == full_name
            ):
                theorem = obj()
                key = theorem.identifier().lower()
                if key in theorems:
                    logger.warning("[REGISTRY] Duplicate identifier %s in %s ignored", key, full_name)
                    continue
                theorems[key] = theorem
                logger.debug("[REGISTRY] Registered theorem: %s", obj.__name__)

    return theorems


def _index_aliases(theorems: dict[str, BaseTheorem]) -> dict[str, str]:
    """Map every alias to the identifier it stands for."""
    aliases: dict[str, str] = {}
    for key, theorem in theorems.items():
        for alias in theorem.aliases:
            alias = alias.lower()
            if alias in theorems or alias in aliases:
                logger.warning("[REGISTRY] Alias %s of %s clashes with an existing key; ignored", alias, key)
                continue
            aliases[alias] = key
    return aliases


# Load once at module import
_THEOREMS = _load_theorems()
_ALIASES = _index_aliases(_THEOREMS)
logger.debug("[REGISTRY] Loaded %d theorems: %s", len(_THEOREMS), sorted(_THEOREMS))


# ── Public API ────────────────────────────────────────────────────────────────

def list_theorems() -> list[BaseTheorem]:
    return [_THEOREMS[key] for key in sorted(_THEOREMS)]


def get_theorem(identifier: str) -> BaseTheorem:
    """Return the theorem matching the given identifier or alias (case-insensitive)."""
    key = (identifier or "").strip().lower()
    theorem = _THEOREMS.get(_ALIASES.get(key, key))
    if theorem is None:
        raise InvalidParametersError(
            f"Unknown theorem {identifier!r}; known: {', '.join(sorted(_THEOREMS))}"
        )
    return theorem

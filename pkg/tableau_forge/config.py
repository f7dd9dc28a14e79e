"""
tableau_forge/config.py – Centralised configuration for tableau-forge.

Caps, truncation defaults and paths live here.
Import this module instead of scattering constants across core files.
"""

import os
from fractions import Fraction

from tableau_forge.core.errors import InvalidParametersError


def _env_int(name: str, default):
    raw = os.environ.get(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        value = int(raw)
    except ValueError:
        raise InvalidParametersError(f"{name} must be an integer, got {raw!r}") from None
    if value < 1:
        raise InvalidParametersError(f"{name} must be positive, got {value}")
    return value


# ---------------------------------------------------------------------------
# Base paths
# ---------------------------------------------------------------------------
BASE_DIR = os.path.dirname(os.path.abspath(__file__))

# ---------------------------------------------------------------------------
# Enumeration caps
# ---------------------------------------------------------------------------
CELL_CAP          = _env_int("TABLEAU_FORGE_CAP", 24)   # cells for SYT counting
SERIES_WEIGHT_CAP = 30          # largest truncation order the enumerator accepts
BOX_CAP           = 64          # a*b*c for boxed plane partitions
BIG_SHAPE_CELLS   = 60          # cells for weighted tableau enumeration
EXCITED_CAP       = 10 ** 6     # excited diagrams per shape

# ---------------------------------------------------------------------------
# Series / q-calculus defaults
# ---------------------------------------------------------------------------
DEFAULT_TRUNCATION = 8
QINTEGRAL_DEPTH    = 40
DEFAULT_Q          = Fraction(1, 2)

# Alternants up to this size use permutation expansion; larger ones go to sympy.
PERMUTATION_DET_MAX = 8

# ---------------------------------------------------------------------------
# Sweeps
# ---------------------------------------------------------------------------
SWEEP_JOBS      = _env_int("TABLEAU_FORGE_JOBS", None)  # None: physical core count
SWEEP_CHUNKSIZE = 4

# ---------------------------------------------------------------------------
# Logging
# ---------------------------------------------------------------------------
LOG_DIR           = os.environ.get("TABLEAU_FORGE_LOG_DIR") or os.path.join(BASE_DIR, "logs")
LOG_FILE          = os.path.join(LOG_DIR, "tableau_forge.log")
CONSOLE_LOG_LEVEL = "WARNING"

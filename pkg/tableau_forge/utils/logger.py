"""
tableau_forge/utils/logger.py – Central application logger for tableau-forge.

Usage:
    from tableau_forge.utils.logger import get_logger
    logger = get_logger(__name__)
    logger.info("[ORACLE] Hello")

The console handler writes to stderr: stdout is reserved for command output.
"""

import logging
import os
import sys
from logging.handlers import RotatingFileHandler

from tableau_forge import config as cfg

_FORMAT = "[%(asctime)s] [%(levelname)s] %(message)s"
_DATE_FORMAT = "%H:%M:%S"

_configured = False
_console_handler: logging.Handler | None = None


def _configure():
    global _configured, _console_handler
    if _configured:
        return

    root = logging.getLogger()
    root.setLevel(logging.DEBUG)

    fmt = logging.Formatter(_FORMAT, datefmt=_DATE_FORMAT)

    # ── stderr handler ────────────────────────────────────────────────────
    _console_handler = logging.StreamHandler(sys.stderr)
    _console_handler.setLevel(cfg.CONSOLE_LOG_LEVEL)
    _console_handler.setFormatter(fmt)
    root.addHandler(_console_handler)

    # ── rotating file handler (5 MB × 3 backups) ─────────────────────────
    try:
        os.makedirs(cfg.LOG_DIR, exist_ok=True)
        file_handler = RotatingFileHandler(
            cfg.LOG_FILE,
            maxBytes=5 * 1024 * 1024,
            backupCount=3,
            encoding="utf-8",
        )
    except OSError as exc:
        sys.stderr.write(f"warning: file logging disabled ({exc})\n")
    else:
        file_handler.setLevel(logging.INFO)
        file_handler.setFormatter(fmt)
        root.addHandler(file_handler)

    # ── Silence verbose third-party loggers ──────────────────────────────
    logging.getLogger("hypothesis").setLevel(logging.WARNING)
    logging.getLogger("sympy").setLevel(logging.WARNING)

    _configured = True


def get_logger(name: str) -> logging.Logger:
    """Return a named logger, configuring the root logger on first call."""
    _configure()
    return logging.getLogger(name)


def set_console_level(level: int | str):
    """Change the verbosity of the stderr handler (the log file is unaffected)."""
    _configure()
    _console_handler.setLevel(level)

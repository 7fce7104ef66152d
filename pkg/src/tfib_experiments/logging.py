"""Logging helpers for TfibExperiments."""

from __future__ import annotations

import logging
import os
from typing import Optional

_DEFAULT_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"
ENV_VAR = "TFIB_LOG"


def configure_logging(level: int = logging.INFO, format_string: str = _DEFAULT_FORMAT) -> None:
    """Configure global logging with a consistent format."""
    logging.basicConfig(level=level, format=format_string, force=True)


def get_logger(name: Optional[str] = None) -> logging.Logger:
    """Return a configured logger for the given name."""
    return logging.getLogger(name or __name__)


def level_from_env(var: str = ENV_VAR, default: int = logging.WARNING) -> int:
    """Resolve a logging level from an environment variable.

    Accepts level names (``debug``, ``INFO``) or integers. Anything else
    falls back to ``default``.
    """
    raw = os.environ.get(var, "").strip()
    if not raw:
        return default
    if raw.lstrip("-").isdigit():
        return int(raw)
    level = logging.getLevelName(raw.upper())
    return level if isinstance(level, int) else default

"""Top-level package for TfibExperiments."""

from tfib_experiments.logging import configure_logging, get_logger, level_from_env

__all__ = ["configure_logging", "get_logger", "level_from_env"]
__version__ = "0.1.0"

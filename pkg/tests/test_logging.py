import logging

from tfib_experiments import configure_logging, get_logger, level_from_env


def test_get_logger_returns_logger():
    logger = get_logger("tfib.test")
    assert isinstance(logger, logging.Logger)
    assert logger.name == "tfib.test"


def test_configure_logging_sets_level():
    configure_logging(level=logging.WARNING)
    logger = get_logger("tfib.warning")
    assert logger.isEnabledFor(logging.WARNING)
    assert not logger.isEnabledFor(logging.DEBUG)


def test_level_from_env_reads_names_and_numbers(monkeypatch):
    monkeypatch.setenv("TFIB_LOG", "debug")
    assert level_from_env() == logging.DEBUG
    monkeypatch.setenv("TFIB_LOG", "15")
    assert level_from_env() == 15


def test_level_from_env_falls_back(monkeypatch):
    monkeypatch.delenv("TFIB_LOG", raising=False)
    assert level_from_env() == logging.WARNING
    monkeypatch.setenv("TFIB_LOG", "chatty")
    assert level_from_env(default=logging.ERROR) == logging.ERROR

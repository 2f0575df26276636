"""Tests for the logging helpers."""

import logging
from unittest.mock import MagicMock

import pytest

from src.infrastructure.logging import logger as logger_module


def test_logger_builder_creates_configured_logger(tmp_path, monkeypatch) -> None:
    """LoggerBuilder should write dated files below the project logs folder."""
    monkeypatch.delenv("HECKE_LOG_DIR", raising=False)
    monkeypatch.setattr(logger_module, "get_project_root", lambda: tmp_path)
    monkeypatch.setattr(
        logger_module.LoggerBuilder,
        "_today_stamp",
        staticmethod(lambda: "20240101"),
    )

    builder = logger_module.LoggerBuilder()
    custom_logger = (
        builder.name("hecke.test.sweep")
        .subdir("sweeps")
        .prefix("sweep_logs")
        .console(True)
        .level(logging.WARNING)
        .build()
    )

    assert custom_logger.name == "hecke.test.sweep"
    assert custom_logger.level == logging.WARNING
    assert custom_logger.propagate is False
    file_handlers = [
        h for h in custom_logger.handlers if isinstance(h, logging.FileHandler)
    ]
    assert len(file_handlers) == 1
    expected_path = tmp_path / "logs" / "sweeps" / "20240101_sweep_logs.log"
    assert file_handlers[0].baseFilename == str(expected_path)
    assert builder.build() is custom_logger


def test_log_dir_override_takes_precedence(tmp_path, monkeypatch) -> None:
    """HECKE_LOG_DIR should replace the project logs folder."""
    monkeypatch.setenv("HECKE_LOG_DIR", str(tmp_path / "elsewhere"))
    monkeypatch.setattr(
        logger_module.LoggerBuilder,
        "_today_stamp",
        staticmethod(lambda: "20250202"),
    )

    path = logger_module.LoggerBuilder().subdir("audit").prefix("x").log_path()

    assert path == tmp_path / "elsewhere" / "audit" / "20250202_x.log"
    assert path.parent.is_dir()


def test_injected_factories_are_used(tmp_path, monkeypatch) -> None:
    """Custom formatter and handler factories should replace the defaults."""
    monkeypatch.setenv("HECKE_LOG_DIR", str(tmp_path))
    fmt = logging.Formatter("%(message)s")
    file_handler = logging.NullHandler()
    calls = {}

    def _file_factory(path, formatter):
        calls["path"] = path
        calls["formatter"] = formatter
        return file_handler

    built = (
        logger_module.LoggerBuilder()
        .name("hecke.test.injected")
        .console(False)
        .formatter(lambda: fmt)
        .file_handler(_file_factory)
        .build()
    )

    assert built.handlers == [file_handler]
    assert calls["formatter"] is fmt
    assert calls["path"].parent == tmp_path


def test_default_handlers_use_formatter(tmp_path) -> None:
    """Default handlers should apply the provided formatter."""
    fmt = logger_module.LoggerBuilder._default_formatter()
    file_handler = logger_module.LoggerBuilder._default_file_handler(
        tmp_path / "logs.log",
        fmt,
    )
    console_handler = logger_module.LoggerBuilder._default_console_handler(fmt)

    assert isinstance(file_handler, logging.FileHandler)
    assert file_handler.level == logging.DEBUG
    assert file_handler.formatter is fmt
    assert isinstance(console_handler, logging.StreamHandler)
    assert console_handler.level == logging.INFO
    assert console_handler.formatter is fmt
    file_handler.close()


def test_level_read_from_environment(monkeypatch) -> None:
    """HECKE_LOG_LEVEL should set the level; junk falls back to INFO."""
    monkeypatch.setenv("HECKE_LOG_LEVEL", "debug")
    assert logger_module._level_from_env() == logging.DEBUG

    monkeypatch.setenv("HECKE_LOG_LEVEL", "chatty")
    assert logger_module._level_from_env() == logging.INFO


def test_logger_singleton_delegates_to_underlying_logger(monkeypatch) -> None:
    """Logger info/warning/error/etc. should call the wrapped logger."""
    fake_logger = MagicMock()
    monkeypatch.setattr(
        logger_module.LoggerBuilder,
        "build",
        lambda self: fake_logger,
    )
    monkeypatch.setattr(logger_module.Logger, "_instance", None)

    logger = logger_module.Logger("hecke")
    logger.info("hello")
    logger.warning("warn")
    logger.error("err")
    logger.debug("dbg")
    logger.critical("crit")

    fake_logger.info.assert_called_with("hello")
    fake_logger.warning.assert_called_with("warn")
    fake_logger.error.assert_called_with("err")
    fake_logger.debug.assert_called_with("dbg")
    fake_logger.critical.assert_called_with("crit")
    assert logger_module.Logger("hecke") is logger


def test_app_and_audit_loggers_are_singletons(monkeypatch) -> None:
    """get_app_logger and get_audit_logger should return distinct singletons."""
    monkeypatch.setattr(
        logger_module.LoggerBuilder,
        "build",
        lambda self: MagicMock(),
    )
    monkeypatch.setattr(logger_module.AppLogger, "_instance", None)
    monkeypatch.setattr(logger_module.AuditLogger, "_instance", None)

    app_logger = logger_module.get_app_logger()
    audit_logger = logger_module.get_audit_logger()

    assert logger_module.get_app_logger() is app_logger
    assert logger_module.get_audit_logger() is audit_logger
    assert audit_logger is not app_logger


def test_audit_verdict_format(monkeypatch) -> None:
    """Verdicts should be logged as sorted key=value pairs."""
    fake_logger = MagicMock()
    monkeypatch.setattr(
        logger_module.LoggerBuilder,
        "build",
        lambda self: fake_logger,
    )
    monkeypatch.setattr(logger_module.AuditLogger, "_instance", None)

    logger_module.get_audit_logger().verdict("identity", True, p=73, kind="tc")

    fake_logger.info.assert_called_once_with(
        "check=identity passed=true kind=tc p=73"
    )


def test_set_level_by_name(monkeypatch) -> None:
    """set_level should accept level names in any case and refuse others."""
    fake_logger = MagicMock()
    monkeypatch.setattr(
        logger_module.LoggerBuilder,
        "build",
        lambda self: fake_logger,
    )
    monkeypatch.setattr(logger_module.Logger, "_instance", None)
    logger = logger_module.Logger("hecke")

    logger.set_level(" warning ")

    fake_logger.setLevel.assert_called_once_with(logging.WARNING)
    with pytest.raises(ValueError):
        logger.set_level("chatty")

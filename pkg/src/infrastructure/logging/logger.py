"""Loggers for hecke-lab runs.

A fluent ``LoggerBuilder`` assembles ``logging.Logger`` objects; two
singletons sit on top of it: the application logger (console and file)
and the audit logger, a file-only trail of every verification verdict.
"""

import logging
import os
import sys
from dataclasses import dataclass
from datetime import datetime
from pathlib import Path

LOG_DIR_ENV = "HECKE_LOG_DIR"
LOG_LEVEL_ENV = "HECKE_LOG_LEVEL"
LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")
DEFAULT_FORMAT = "%(asctime)s [%(levelname)s] %(message)s"


def get_project_root() -> Path:
    """Return the directory holding the ``src`` package."""
    return Path(__file__).resolve().parents[3]


@dataclass
class LoggerConfig:
    """Settings collected by the builder.

    Attributes:
        name (str): Name passed to ``logging.getLogger``.
        subdir (str): Folder below the log root, empty for the root itself.
        file_prefix (str): Suffix of the dated log file name.
        console (bool): Whether records are echoed to stdout.
        level (int): Threshold of the logger.
    """
    name: str = "hecke"
    subdir: str = ""
    file_prefix: str = "hecke_logs"
    console: bool = True
    level: int = logging.INFO


def _level_from_env(default: int = logging.INFO) -> int:
    raw = os.getenv(LOG_LEVEL_ENV, "").strip().upper()
    if not raw:
        return default
    level = logging.getLevelName(raw)
    return level if isinstance(level, int) else default


class LoggerBuilder:
    """Fluent builder for file and console loggers.

    Handler and formatter factories are injectable so tests can swap them
    for in-memory doubles.
    """

    def __init__(self, config: LoggerConfig | None = None):
        self._cfg = config or LoggerConfig()
        self._formatter_factory = self._default_formatter
        self._file_handler_factory = self._default_file_handler
        self._console_handler_factory = self._default_console_handler

    def name(self, logger_name: str) -> "LoggerBuilder":
        self._cfg.name = logger_name
        return self

    def subdir(self, log_subdir: str) -> "LoggerBuilder":
        self._cfg.subdir = log_subdir
        return self

    def prefix(self, file_prefix: str) -> "LoggerBuilder":
        self._cfg.file_prefix = file_prefix
        return self

    def console(self, enabled: bool) -> "LoggerBuilder":
        self._cfg.console = enabled
        return self

    def level(self, level: int) -> "LoggerBuilder":
        self._cfg.level = level
        return self

    def formatter(self, factory) -> "LoggerBuilder":
        """Use ``factory()`` to create the formatter."""
        self._formatter_factory = factory
        return self

    def file_handler(self, factory) -> "LoggerBuilder":
        """Use ``factory(path, formatter)`` to create the file handler."""
        self._file_handler_factory = factory
        return self

    def console_handler(self, factory) -> "LoggerBuilder":
        """Use ``factory(formatter)`` to create the console handler."""
        self._console_handler_factory = factory
        return self

    def log_path(self) -> Path:
        """Return the dated file the built logger writes to."""
        root = self._log_root()
        log_dir = root / self._cfg.subdir if self._cfg.subdir else root
        self._ensure_dir(log_dir)
        return log_dir / f"{self._today_stamp()}_{self._cfg.file_prefix}.log"

    def build(self) -> logging.Logger:
        """Build the logger, or return it untouched if it already has handlers.

        Returns:
            logging.Logger: The configured logger.
        """
        logger = logging.getLogger(self._cfg.name)
        if logger.handlers:
            return logger

        fmt = self._formatter_factory()
        if self._cfg.console:
            logger.addHandler(self._console_handler_factory(fmt))
        logger.addHandler(self._file_handler_factory(self.log_path(), fmt))
        logger.setLevel(self._cfg.level)
        logger.propagate = False
        return logger

    @staticmethod
    def _log_root() -> Path:
        """``$HECKE_LOG_DIR`` when set, else ``<project root>/logs``."""
        override = os.getenv(LOG_DIR_ENV)
        if override:
            return Path(override)
        return get_project_root() / "logs"

    @staticmethod
    def _ensure_dir(p: Path) -> Path:
        p.mkdir(parents=True, exist_ok=True)
        return p

    @staticmethod
    def _today_stamp() -> str:
        return datetime.now().strftime("%Y%m%d")

    @staticmethod
    def _default_formatter() -> logging.Formatter:
        return logging.Formatter(DEFAULT_FORMAT)

    @staticmethod
    def _default_file_handler(path: Path,
                              fmt: logging.Formatter) -> logging.Handler:
        h = logging.FileHandler(path, encoding="utf-8")
        h.setLevel(logging.DEBUG)
        h.setFormatter(fmt)
        return h

    @staticmethod
    def _default_console_handler(fmt: logging.Formatter) -> logging.Handler:
        h = logging.StreamHandler(sys.stderr)
        h.setLevel(logging.INFO)
        h.setFormatter(fmt)
        return h


class Logger:
    """Singleton wrapper around a built ``logging.Logger``.

    Subclasses override ``_initialize`` to pick their own destination and
    keep their own ``_instance``.
    """

    _instance = None

    def __new__(cls, name: str = "hecke"):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
            cls._instance._initialize(name)
        return cls._instance

    def _initialize(self, name: str) -> None:
        self.logger = (
            LoggerBuilder()
            .name(name)
            .prefix("Hecke_logs")
            .level(_level_from_env())
            .build()
        )

    def set_level(self, level_name: str) -> None:
        """Set the threshold from a name such as ``"DEBUG"``.

        Raises:
            ValueError: If the name is not a logging level.
        """
        name = level_name.strip().upper()
        if name not in LOG_LEVELS:
            raise ValueError(f"Unknown log level '{level_name}'")
        self.logger.setLevel(getattr(logging, name))

    def debug(self, msg: str) -> None:
        self.logger.debug(msg)

    def info(self, msg: str) -> None:
        self.logger.info(msg)

    def warning(self, msg: str) -> None:
        self.logger.warning(msg)

    def error(self, msg: str) -> None:
        self.logger.error(msg)

    def critical(self, msg: str) -> None:
        self.logger.critical(msg)


class AppLogger(Logger):
    """Application logger: stderr plus ``logs/app/<date>_App_logs.log``."""

    _instance = None

    def _initialize(self, name: str = "app") -> None:
        self.logger = (
            LoggerBuilder()
            .name("hecke.app")
            .subdir("app")
            .prefix("App_logs")
            .console(True)
            .level(_level_from_env())
            .build()
        )


class AuditLogger(Logger):
    """File-only trail of verification verdicts under ``logs/audit``."""

    _instance = None

    def _initialize(self, name: str = "audit") -> None:
        self.logger = (
            LoggerBuilder()
            .name("hecke.audit")
            .subdir("audit")
            .prefix("Audit_logs")
            .console(False)
            .build()
        )

    def verdict(self, check: str, passed: bool, **details) -> None:
        """Record one check outcome as ``check=... passed=... k=v ...``."""
        extra = " ".join(f"{k}={v}" for k, v in sorted(details.items()))
        line = f"check={check} passed={str(passed).lower()}"
        self.logger.info(f"{line} {extra}".rstrip())


def get_app_logger() -> AppLogger:
    """Return the application logger singleton."""
    return AppLogger("app")


def get_audit_logger() -> AuditLogger:
    """Return the audit logger singleton."""
    return AuditLogger("audit")


__all__ = [
    "LOG_LEVELS",
    "LoggerConfig",
    "LoggerBuilder",
    "Logger",
    "AppLogger",
    "AuditLogger",
    "get_app_logger",
    "get_audit_logger",
]

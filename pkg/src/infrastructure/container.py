"""Composition root for wiring infrastructure adapters."""

import sys
from typing import TextIO

from src.application.ports.records import RecordWriterPort
from src.application.ports.tasks import TaskRunnerPort
from src.infrastructure.executor import ProcessPoolTaskRunner, SerialTaskRunner
from src.infrastructure.logging.logger import get_app_logger
from src.infrastructure.settings import RunConfig
from src.infrastructure.writers import WRITERS


def build_run_config(**overrides) -> RunConfig:
    """Return the environment configuration with CLI overrides applied."""
    return RunConfig.from_env().with_overrides(**overrides)


def configure_logging(config: RunConfig, logger=None) -> None:
    """Apply ``config.log_level`` to the application logger."""
    (logger or get_app_logger()).set_level(config.log_level)


def build_record_writer(
    config: RunConfig,
    stream: TextIO | None = None,
) -> RecordWriterPort:
    """Return the writer for ``config.output_format`` on ``stream`` (stdout)."""
    return WRITERS[config.output_format](stream or sys.stdout)


def build_task_runner(config: RunConfig) -> TaskRunnerPort:
    """Return a serial runner for one worker, else a process pool."""
    if config.workers <= 1:
        return SerialTaskRunner()
    return ProcessPoolTaskRunner(config.workers, logger=get_app_logger())


__all__ = [
    "build_run_config",
    "configure_logging",
    "build_record_writer",
    "build_task_runner",
]

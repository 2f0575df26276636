"""Application ports package."""

from .records import CommandResult, Record, RecordWriterPort
from .tasks import TaskRunnerPort

__all__ = [
    "CommandResult",
    "Record",
    "RecordWriterPort",
    "TaskRunnerPort",
]

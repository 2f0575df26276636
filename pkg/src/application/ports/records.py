"""Ports for emitting command output."""

from collections.abc import Iterable
from dataclasses import dataclass
from typing import Any, Protocol

# One output row: a flat mapping with a "record" discriminator.
Record = dict[str, Any]


@dataclass(frozen=True)
class CommandResult:
    """Outcome of a command.

    Attributes:
        records: Rows to emit, in output order.
        passed: False when any requested check failed.
    """

    records: tuple[Record, ...]
    passed: bool = True


class RecordWriterPort(Protocol):
    """Port serializing records to an output stream."""

    def write(self, records: Iterable[Record]) -> int:
        """Write the records and return how many were written."""


__all__ = ["Record", "CommandResult", "RecordWriterPort"]

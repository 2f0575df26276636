"""Record writers: JSON lines, CSV and plain text."""

import csv
import json
from collections.abc import Iterable
from typing import TextIO

from src.application.ports.records import Record


def _format_number(value) -> str:
    """Render floats with 17 significant digits, '.' decimal and no grouping."""
    if value is None:
        return ""
    if isinstance(value, bool):
        return str(value).lower()
    if isinstance(value, float):
        return format(value, ".17g")
    if isinstance(value, (list, tuple)):
        return " ".join(_format_number(v) for v in value)
    return str(value)


class JsonLinesWriter:
    """One JSON object per line, keys sorted."""

    def __init__(self, stream: TextIO) -> None:
        self._stream = stream

    def write(self, records: Iterable[Record]) -> int:
        count = 0
        for record in records:
            self._stream.write(
                json.dumps(record, sort_keys=True, ensure_ascii=False) + "\n"
            )
            count += 1
        return count


class CsvWriter:
    """CSV with the header taken from the first record.

    The ``record`` discriminator is dropped; every record of one command has
    the same kind.
    """

    def __init__(self, stream: TextIO) -> None:
        self._stream = stream

    def write(self, records: Iterable[Record]) -> int:
        writer = None
        count = 0
        for record in records:
            row = {k: v for k, v in record.items() if k != "record"}
            if writer is None:
                writer = csv.DictWriter(
                    self._stream,
                    fieldnames=list(row),
                    extrasaction="ignore",
                    lineterminator="\n",
                )
                writer.writeheader()
            writer.writerow({k: _format_number(v) for k, v in row.items()})
            count += 1
        return count


class PlainWriter:
    """``key=value`` pairs, one record per line."""

    def __init__(self, stream: TextIO) -> None:
        self._stream = stream

    def write(self, records: Iterable[Record]) -> int:
        count = 0
        for record in records:
            self._stream.write(
                " ".join(f"{k}={_format_number(v)}" for k, v in record.items())
                + "\n"
            )
            count += 1
        return count


WRITERS = {
    "json": JsonLinesWriter,
    "csv": CsvWriter,
    "plain": PlainWriter,
}


__all__ = ["JsonLinesWriter", "CsvWriter", "PlainWriter", "WRITERS"]

"""Port for running independent work items."""

from collections.abc import Callable, Iterable
from typing import Any, Protocol


class TaskRunnerPort(Protocol):
    """Port mapping a function over items, possibly in parallel."""

    def map(self, fn: Callable[[Any], Any], items: Iterable[Any]) -> list[Any]:
        """Return ``[fn(item) for item in items]`` in input order."""


__all__ = ["TaskRunnerPort"]

"""Task runners over independent work items."""

from collections.abc import Callable, Iterable
from concurrent.futures import ProcessPoolExecutor
from typing import Any


class SerialTaskRunner:
    """Runs every item in the calling process."""

    def map(self, fn: Callable[[Any], Any], items: Iterable[Any]) -> list[Any]:
        return [fn(item) for item in items]


class ProcessPoolTaskRunner:
    """Fans items out to a process pool; results keep the input order.

    ``fn`` and the items must be picklable, so work functions live at
    module level.
    """

    def __init__(self, workers: int, logger=None) -> None:
        if workers < 1:
            raise ValueError(f"Workers must be positive, got {workers}")
        self._workers = workers
        self._logger = logger

    def map(self, fn: Callable[[Any], Any], items: Iterable[Any]) -> list[Any]:
        items = list(items)
        if self._logger is not None:
            self._logger.debug(
                f"Dispatching {len(items)} items to {self._workers} workers"
            )
        chunk = max(1, len(items) // (4 * self._workers))
        with ProcessPoolExecutor(max_workers=self._workers) as pool:
            return list(pool.map(fn, items, chunksize=chunk))


__all__ = ["SerialTaskRunner", "ProcessPoolTaskRunner"]

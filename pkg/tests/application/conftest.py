"""Shared doubles for the use case tests."""

import pytest


class RecordingLogger:
    """Collect messages per level instead of writing them."""

    def __init__(self) -> None:
        self.messages: dict[str, list[str]] = {
            "debug": [],
            "info": [],
            "warning": [],
            "error": [],
        }

    def debug(self, msg: str) -> None:
        self.messages["debug"].append(msg)

    def info(self, msg: str) -> None:
        self.messages["info"].append(msg)

    def warning(self, msg: str) -> None:
        self.messages["warning"].append(msg)

    def error(self, msg: str) -> None:
        self.messages["error"].append(msg)


class RecordingRunner:
    """Serial task runner that remembers the items it was given."""

    def __init__(self) -> None:
        self.items: list = []

    def map(self, fn, items):
        self.items = list(items)
        return [fn(item) for item in self.items]


@pytest.fixture
def logger() -> RecordingLogger:
    """Fresh recording logger."""
    return RecordingLogger()


@pytest.fixture
def runner() -> RecordingRunner:
    """Fresh recording runner."""
    return RecordingRunner()

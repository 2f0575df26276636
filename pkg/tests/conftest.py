"""Pytest configuration that ensures the src package is importable."""

from pathlib import Path
import sys

import pytest

ROOT = Path(__file__).resolve().parents[1]
if str(ROOT) not in sys.path:
    sys.path.insert(0, str(ROOT))


@pytest.fixture(autouse=True, scope="session")
def _isolated_log_dir(tmp_path_factory):
    """Keep log files of the test run out of the project tree."""
    with pytest.MonkeyPatch.context() as mp:
        mp.setenv("HECKE_LOG_DIR", str(tmp_path_factory.mktemp("logs")))
        yield

"""Tests for the SweepCompatibilityUseCase."""

import pytest

from src.application.use_cases.sweep_compatibility import (
    SweepCompatibilityUseCase,
)
from src.domain.models.multipliers import CompatReport


def test_sweep_level_2(runner, logger) -> None:
    """Every prime from 5 to 31 is compatible at level 2."""
    use_case = SweepCompatibilityUseCase(
        runner=runner, random_samples=5, logger=logger
    )
    result = use_case.execute(2, 5, 31)

    assert runner.items == [5, 7, 11, 13, 17, 19, 23, 29, 31]
    assert result.passed
    assert [r["p"] for r in result.records] == runner.items
    assert all(r["compatible"] and r["witnesses"] == 0 for r in result.records)
    assert result.records[0]["random_checked"] == 5


def test_sweep_skips_primes_dividing_level(logger) -> None:
    """p = 2 is dropped and the sweep runs serially without a runner."""
    result = SweepCompatibilityUseCase(random_samples=0, logger=logger).execute(
        4, 2, 7
    )

    assert [r["p"] for r in result.records] == [3, 5, 7]
    assert result.passed


def test_sweep_reports_failures(monkeypatch, runner, logger) -> None:
    """A failing prime makes the sweep fail and is logged."""
    from src.application.use_cases import sweep_compatibility

    def fake_check(level, p, random_samples, seed):
        return CompatReport(level, p, p != 7, 3, random_samples)

    monkeypatch.setattr(sweep_compatibility, "compat_check", fake_check)
    result = SweepCompatibilityUseCase(runner=runner, logger=logger).execute(
        2, 5, 11
    )

    assert not result.passed
    assert "p = [7]" in logger.messages["warning"][0]


@pytest.mark.parametrize(("level", "pmin", "pmax"), [(3, 5, 7), (2, 11, 5)])
def test_sweep_invalid_arguments(level, pmin, pmax, logger) -> None:
    """Unsupported levels and empty ranges are refused."""
    with pytest.raises(ValueError):
        SweepCompatibilityUseCase(logger=logger).execute(level, pmin, pmax)

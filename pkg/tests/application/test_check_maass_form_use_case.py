"""Tests for the CheckMaassFormUseCase."""

import math

import pytest

from src.application.use_cases.check_maass_form import (
    HECKE_TOLERANCE,
    MODULARITY_TOLERANCE,
    CheckMaassFormUseCase,
)
from src.domain.errors import ConvergenceError


def test_eval_reports_value_and_bound(logger) -> None:
    """u_L at 0.1 + 2i is finite and carries the error bound."""
    result = CheckMaassFormUseCase(logger=logger).execute("ul", "eval", 0.1, 2.0)

    record = result.records[0]
    assert result.passed
    assert record["record"] == "maass"
    assert record["error_bound"] == 1e-12
    assert math.isfinite(record["re"]) and math.isfinite(record["im"])
    assert "residual" not in record


def test_modularity_default_gamma(logger) -> None:
    """γ defaults to R = (1 0; 2 1) for u_C."""
    result = CheckMaassFormUseCase(logger=logger).execute(
        "uc", "modularity", 0.0, 1.0
    )

    record = result.records[0]
    assert record["gamma"] == [1, 0, 2, 1]
    assert record["tolerance"] == MODULARITY_TOLERANCE
    assert record["residual"] < MODULARITY_TOLERANCE
    assert result.passed
    assert "residual" in logger.messages["info"][0]


def test_hecke_action(logger) -> None:
    """T_5 u_C = 0 at 0.3 + 1.5i."""
    result = CheckMaassFormUseCase(logger=logger).execute(
        "uc", "hecke", 0.3, 1.5, p=5
    )

    record = result.records[0]
    assert (record["p"], record["eigenvalue"]) == (5, 0)
    assert record["tolerance"] == HECKE_TOLERANCE
    assert result.passed


def test_invalid_requests(logger) -> None:
    """Unknown actions, a missing prime and low points are refused."""
    use_case = CheckMaassFormUseCase(logger=logger)
    with pytest.raises(ValueError):
        use_case.execute("uc", "plot", 0.0, 1.0)
    with pytest.raises(ValueError):
        use_case.execute("uc", "hecke", 0.0, 1.0)
    with pytest.raises(ConvergenceError):
        use_case.execute("uc", "hecke", 0.0, 1.0, p=23)

"""Tests for the quantum form evaluation and Hecke use cases."""

from fractions import Fraction

import pytest

from src.application.use_cases.evaluate_quantum_form import (
    ApplyHeckeOperatorUseCase,
    EvaluateQuantumFormUseCase,
)
from src.domain.errors import BadPrime, DomainError


def test_evaluate_fc_at_zero(logger) -> None:
    """f_C(0) = 2 at the cusp 0."""
    result = EvaluateQuantumFormUseCase(logger=logger).execute("fc", Fraction(0))

    record = result.records[0]
    assert record["record"] == "qeval"
    assert (record["form"], record["x"], record["exact"]) == ("fc", 0, "2")
    assert record["re"] == pytest.approx(2.0)
    assert record["im"] == pytest.approx(0.0, abs=1e-25)
    assert result.passed


def test_evaluate_fc_embedding(logger) -> None:
    """f_C(1/2) = −2ζ_48 embeds as −2e^{πi/24}."""
    import cmath

    result = EvaluateQuantumFormUseCase(logger=logger).execute("fc", Fraction(1, 2))

    record = result.records[0]
    expected = -2 * cmath.exp(1j * cmath.pi / 24)
    assert record["x"] == "1/2"
    assert complex(record["re"], record["im"]) == pytest.approx(expected)


def test_evaluate_fl_rejects_cusp_one_half(logger) -> None:
    """The orbit of 1/2 is outside the domain of f_L."""
    with pytest.raises(DomainError):
        EvaluateQuantumFormUseCase(logger=logger).execute("fl", Fraction(1, 2))


def test_hecke_matches_eigenvalue(logger) -> None:
    """T_7 f_L = 2f_L."""
    result = ApplyHeckeOperatorUseCase(logger=logger).execute(
        "fl", 7, Fraction(1, 3)
    )

    record = result.records[0]
    assert record["eigenvalue"] == 2
    assert record["match"] is True
    assert result.passed
    assert logger.messages["warning"] == []


def test_hecke_zero_eigenvalue(logger) -> None:
    """T_5 f_C vanishes at 0."""
    result = ApplyHeckeOperatorUseCase(logger=logger).execute("fc", 5, Fraction(0))

    assert result.records[0]["exact"] == "0"
    assert result.records[0]["eigenvalue"] == 0


def test_hecke_mismatch_is_reported(monkeypatch, logger) -> None:
    """A wrong eigenvalue fails the check with a warning."""
    from src.application.use_cases import evaluate_quantum_form

    monkeypatch.setattr(evaluate_quantum_form, "hecke_eigenvalue", lambda f, p: 3)
    result = ApplyHeckeOperatorUseCase(logger=logger).execute("fl", 7, Fraction(0))

    assert not result.passed
    assert result.records[0]["match"] is False
    assert len(logger.messages["warning"]) == 1


def test_hecke_bad_prime(logger) -> None:
    """p = 4 is not a prime."""
    with pytest.raises(BadPrime):
        ApplyHeckeOperatorUseCase(logger=logger).execute("fl", 4, Fraction(0))

"""Tests for the TabulateCocycleUseCase."""

from fractions import Fraction

import pytest

from src.application.use_cases.tabulate_cocycle import TabulateCocycleUseCase
from src.domain.errors import NotInGroup
from src.domain.models.modular import Mat2

R4 = Mat2.of(1, 0, 4, 1)
GRID = [Fraction(1, 3), Fraction(-1, 4), Fraction(-1), Fraction(0), Fraction(-1, 2)]


def test_hecke_cocycle_rows(runner, logger) -> None:
    """Rows come sorted; the pole and the cusp 1/2 give empty cells."""
    result = TabulateCocycleUseCase(runner=runner, logger=logger).execute(
        "fl", R4, GRID, hecke_p=7
    )

    assert result.passed
    assert runner.items == sorted(GRID)
    rows = {row["x"]: row for row in result.records}
    assert list(rows) == [-1.0, -0.5, -0.25, 0.0, 1 / 3]
    for x in (-0.5, -0.25):
        assert rows[x] == {
            "record": "cocycle",
            "x": x,
            "re_h": None,
            "im_h": None,
            "re_H": None,
            "im_H": None,
        }
    for x in (-1.0, 0.0, 1 / 3):
        assert rows[x]["re_H"] == pytest.approx(2 * rows[x]["re_h"], abs=1e-12)
        assert rows[x]["im_H"] == pytest.approx(2 * rows[x]["im_h"], abs=1e-12)
    assert "2 empty" in logger.messages["info"][-1]


def test_translation_cocycle_vanishes(logger) -> None:
    """h_T = 0 for f_C; only h columns are emitted without a prime."""
    grid = [Fraction(k, 7) for k in range(-7, 7)]
    result = TabulateCocycleUseCase(logger=logger).execute(
        "fc", Mat2.of(1, 1, 0, 1), grid
    )

    assert result.passed
    for row in result.records:
        assert set(row) == {"record", "x", "re_h", "im_h"}
        assert row["re_h"] == 0.0 and row["im_h"] == 0.0


def test_mismatch_fails(monkeypatch, logger) -> None:
    """A wrong eigenvalue is caught exactly and logged."""
    from src.application.use_cases import tabulate_cocycle

    monkeypatch.setattr(tabulate_cocycle, "hecke_eigenvalue", lambda f, p: 3)
    result = TabulateCocycleUseCase(logger=logger).execute(
        "fl", R4, [Fraction(0), Fraction(1, 3)], hecke_p=7
    )

    assert not result.passed
    assert "H != λ·h at" in logger.messages["warning"][0]


def test_gamma_outside_the_group(logger) -> None:
    """(1 0; 2 1) is not in Γ₀(4)."""
    with pytest.raises(NotInGroup):
        TabulateCocycleUseCase(logger=logger).execute(
            "fl", Mat2.of(1, 0, 2, 1), GRID
        )

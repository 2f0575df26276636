"""Tests for the ExpandSeriesUseCase."""

import pytest

from src.application.use_cases.expand_series import (
    SERIES_NAMES,
    ExpandSeriesUseCase,
)


def test_single_series_records(logger) -> None:
    """W₂ to order 4 has nonzero terms at q, q³ and q⁴."""
    result = ExpandSeriesUseCase(logger=logger).execute("w2", 4)

    assert [r["index"] for r in result.records] == [1, 3, 4]
    assert [r["coefficient"] for r in result.records] == [-2, -2, 2]
    assert result.records[0] == {
        "record": "series",
        "name": "w2",
        "index": 1,
        "exponent": "1",
        "coefficient": -2,
    }
    assert "3 terms" in logger.messages["info"][0]


def test_combined_series_use_fractional_exponents(logger) -> None:
    """φ is indexed by n with q-exponent |n|/24."""
    result = ExpandSeriesUseCase(logger=logger).execute("phi", 50)

    by_index = {r["index"]: r for r in result.records}
    assert by_index[1]["exponent"] == "1/24"
    assert by_index[-23]["exponent"] == "23/24"
    assert by_index[49]["coefficient"] == -1
    indices = [r["index"] for r in result.records]
    assert indices == sorted(indices)


def test_every_name_expands(logger) -> None:
    """All advertised names produce at least one term."""
    use_case = ExpandSeriesUseCase(logger=logger)
    for name in SERIES_NAMES:
        assert use_case.execute(name, 30).records, name


def test_unknown_name(logger) -> None:
    """Unknown names raise ValueError."""
    with pytest.raises(ValueError, match="Unknown series"):
        ExpandSeriesUseCase(logger=logger).execute("theta", 10)

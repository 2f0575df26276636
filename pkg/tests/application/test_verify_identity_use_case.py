"""Tests for the VerifyIdentityUseCase."""

import pytest

from src.application.use_cases.verify_identity import VerifyIdentityUseCase
from src.domain.errors import BadPrime


@pytest.mark.parametrize(
    ("kind", "p", "rhs"),
    [("tc", 73, 2), ("tc", 97, -2), ("tc", 11, 0), ("tl", 7, 2), ("tl", 31, -2)],
)
def test_identity_matches(kind, p, rhs, logger) -> None:
    """The root-of-unity sum equals ±T(±p)."""
    result = VerifyIdentityUseCase(logger=logger).execute(kind, p)

    assert result.passed
    assert result.records == (
        {
            "record": "identity",
            "kind": kind,
            "p": p,
            "rhs": rhs,
            "expected": rhs,
            "match": True,
        },
    )
    assert f"p={p}" in logger.messages["info"][0]


def test_expected_value_by_class() -> None:
    """T(p), −T(−p) or 0 depending on p modulo 6 or 4."""
    formula = {7: 5, -7: 3}.get
    assert VerifyIdentityUseCase._expected(7, 6, formula) == 5
    assert VerifyIdentityUseCase._expected(7, 4, formula) == -3
    assert VerifyIdentityUseCase._expected(9, 6, formula) == 0


def test_identity_mismatch(monkeypatch, logger) -> None:
    """A disagreeing sum fails the check."""
    from src.application.use_cases import verify_identity

    monkeypatch.setattr(verify_identity, "identity_tl", lambda p, logger=None: 7)
    result = VerifyIdentityUseCase(logger=logger).execute("tl", 7)

    assert not result.passed
    assert result.records[0]["match"] is False


def test_identity_bad_prime(logger) -> None:
    """identity_tc needs p ≥ 5."""
    with pytest.raises(BadPrime):
        VerifyIdentityUseCase(logger=logger).execute("tc", 3)

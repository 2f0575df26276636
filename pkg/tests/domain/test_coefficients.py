"""Tests for T_C(n) and T_L(n): oracles, formulas and tables."""

import random

import pytest

from src.domain.errors import BadResidue
from src.domain.models.coefficients import CoeffKind, CoeffTable, Provenance
from src.domain.services.coefficients import (
    build_coeff_table,
    coefficient,
    residue_indices,
    signed_factorization,
    tc_formula,
    tc_oracle,
    tc_prime_power,
    tl_formula,
    tl_oracle,
    tl_prime_power,
)


@pytest.mark.parametrize(("m", "expected"), [(1, 1), (25, 1), (49, -1)])
def test_tc_oracle_examples(m, expected) -> None:
    """Class counts of u² − 6v² = m with the mod-12 character."""
    assert tc_oracle(m) == expected


@pytest.mark.parametrize(
    ("n", "expected"), [(73, 2), (97, -2), (5, 0), (-23, -2), (1, 1)]
)
def test_tc_formula_examples(n, expected) -> None:
    """Multiplicative formula over signed primes."""
    assert tc_formula(n) == expected


@pytest.mark.parametrize(("n", "expected"), [(1, 1), (-7, -2), (-63, 2)])
def test_tl_oracle_examples(n, expected) -> None:
    """χ_L times the number of ideals of Z[√2] of norm |n|."""
    assert tl_oracle(n) == expected


@pytest.mark.parametrize(("n", "expected"), [(9, -1), (-31, 2), (2, 0)])
def test_tl_formula_examples(n, expected) -> None:
    """Signed-prime formula for T_L."""
    assert tl_formula(n) == expected


def test_oracles_reject_wrong_residues() -> None:
    """The oracles only accept their residue class."""
    with pytest.raises(BadResidue):
        tc_oracle(5)
    with pytest.raises(BadResidue):
        tl_oracle(3)


def test_formula_rejects_huge_indices() -> None:
    """Indices beyond 10⁹ are refused."""
    with pytest.raises(ValueError):
        tc_formula(24 * 10**9 + 1)


def test_signed_factorization() -> None:
    """Primes are signed so that each is ≡ 1 modulo 6 (resp. 4)."""
    assert signed_factorization(-23, 6) == [(-23, 1)]
    assert signed_factorization(25, 6) == [(-5, 2)]
    assert signed_factorization(-63, 4) == [(-3, 2), (-7, 1)]


def test_prime_power_branches() -> None:
    """Split primes give ±(e + 1); inert primes vanish at odd powers."""
    assert tc_prime_power(73, 2) == 3
    assert tc_prime_power(97, 3) == -4
    assert tc_prime_power(-5, 1) == 0
    assert tc_prime_power(-5, 2) == 1
    assert tc_prime_power(7, 2) == -1
    assert tl_prime_power(5, 1) == 0
    assert tl_prime_power(5, 2) == -1
    assert tl_prime_power(-7, 2) == 3


@pytest.mark.parametrize(
    ("kind", "oracle", "formula", "bound"),
    [
        (CoeffKind.TC, tc_oracle, tc_formula, 2500),
        (CoeffKind.TL, tl_oracle, tl_formula, 1500),
    ],
)
def test_oracle_matches_formula(kind, oracle, formula, bound) -> None:
    """Both routes agree on every index of the residue class."""
    for n in residue_indices(kind.modulus, bound):
        assert oracle(n) == formula(n), n


@pytest.mark.parametrize(
    ("kind", "formula"),
    [(CoeffKind.TC, tc_formula), (CoeffKind.TL, tl_formula)],
)
def test_complete_multiplicativity(kind, formula) -> None:
    """T(mn) = T(m)T(n) on random pairs of the residue class."""
    rng = random.Random(kind.modulus)
    pool = residue_indices(kind.modulus, 600)
    for _ in range(100):
        m, n = rng.choice(pool), rng.choice(pool)
        assert formula(m * n) == formula(m) * formula(n), (m, n)


def test_coefficient_dispatch() -> None:
    """Strings are accepted and off-class indices give 0 for both sources."""
    assert coefficient("tc", 73, "oracle") == 2
    assert coefficient("tl", -7, "formula") == -2
    assert coefficient("tc", 5, "oracle") == 0


def test_residue_indices_order() -> None:
    """Indices come by increasing |n|, positive first on ties."""
    assert residue_indices(8, 20) == [1, -7, 9, -15, 17]


def test_build_coeff_table() -> None:
    """The table holds nonzero values and refuses out-of-range lookups."""
    table = build_coeff_table(CoeffKind.TC, 100)
    assert isinstance(table, CoeffTable)
    assert table.provenance is Provenance.FORMULA
    assert (table[73], table[97], table[5], table[-23]) == (2, -2, 0, -2)
    assert 100 in table and 101 not in table
    with pytest.raises(KeyError):
        table[101]
    sizes = [abs(n) for n, _ in table.nonzero()]
    assert sizes == sorted(sizes)


def test_oracle_table_equals_formula_table() -> None:
    """Tables built from either source coincide."""
    by_formula = build_coeff_table("tl", 400)
    by_oracle = build_coeff_table("tl", 400, Provenance.ORACLE)
    assert by_formula.values == by_oracle.values

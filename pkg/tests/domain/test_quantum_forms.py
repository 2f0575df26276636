"""Tests for exact values of f_C and f_L, their Hecke images and cocycles."""

from fractions import Fraction

import pytest
import sympy

from src.domain.errors import BadPrime, DomainError, NotInGroup, PoleError
from src.domain.models.modular import Mat2
from src.domain.services.exact_arith import cyc_make
from src.domain.services.modular_group import T, generator_r
from src.domain.services.quantum_forms import (
    cocycle,
    eval_fc,
    eval_fc_dual,
    eval_fl,
    eval_form,
    hecke_eigenvalue,
    hecke_qmf,
    identity_tc,
    identity_tl,
    is_reflected,
)
from src.utils.rational_utils import parse_grid

R2 = generator_r(2)
R4 = generator_r(4)

FC_POINTS = [Fraction(0), Fraction(1, 3), Fraction(-2, 5), Fraction(3, 8)]
FL_POINTS = [Fraction(0), Fraction(1, 3), Fraction(-2, 5), Fraction(3, 4)]

# Ten points with odd denominator (S₀) and ten with 4 | c (S_∞).
FL_SAMPLE = [
    Fraction(0), Fraction(1, 3), Fraction(-1, 3), Fraction(2, 5), Fraction(-2, 5),
    Fraction(1, 7), Fraction(3, 7), Fraction(2, 9), Fraction(-4, 9), Fraction(1, 5),
    Fraction(1, 4), Fraction(3, 4), Fraction(-1, 4), Fraction(1, 8), Fraction(3, 8),
    Fraction(-5, 8), Fraction(7, 8), Fraction(1, 12), Fraction(5, 12), Fraction(-7, 12),
]


def test_fc_values() -> None:
    """f_C(0) = 2, f_C(1/2) = −2ζ_48, f_C(1) = 2ζ_24."""
    assert eval_fc(0) == 2
    assert eval_fc(Fraction(1, 2)) == cyc_make(48, 1) * -2
    assert eval_fc(1) == cyc_make(24, 1) * 2


def test_fl_values() -> None:
    """f_L(0) = 1 and f_L(x + 1) = ζ_8·f_L(x)."""
    assert eval_fl(0) == 1
    assert eval_fl(1) == cyc_make(8, 1) * eval_fl(0).exact
    for x in FL_POINTS:
        assert eval_fl(x + 1) == cyc_make(8, 1) * eval_fl(x).exact


@pytest.mark.parametrize("x", [Fraction(1, 2), Fraction(1, 6), Fraction(-3, 10)])
def test_fl_rejects_the_cusp_one_half(x) -> None:
    """Points in the orbit of 1/2 are outside the domain of f_L."""
    with pytest.raises(DomainError):
        eval_fl(x)


def test_fc_translation() -> None:
    """f_C(x + 1) = ζ_24·f_C(x)."""
    for x in FC_POINTS:
        assert eval_fc(x + 1) == cyc_make(24, 1) * eval_fc(x).exact


def test_fc_dual_formula_agrees() -> None:
    """f_C from σ and from σ* at inverted roots coincide."""
    for x in FC_POINTS + [Fraction(5, 12), Fraction(-7, 9), Fraction(1, 2)]:
        assert eval_fc_dual(x) == eval_fc(x), x


def test_eval_form_dispatch() -> None:
    """Form names are accepted in either case."""
    assert eval_form("FC", 0) == 2
    assert eval_form("fl", 0) == 1


def test_reflection_rule() -> None:
    """The reflected branch is p ≡ −1 mod 6 for f_C and mod 4 for f_L."""
    assert is_reflected("fc", 23) and not is_reflected("fc", 73)
    assert is_reflected("fl", 7) and not is_reflected("fl", 5)


@pytest.mark.parametrize(
    ("form", "p", "expected"),
    [("fc", 5, 0), ("fc", 73, 2), ("fc", 23, 2), ("fl", 7, 2), ("fl", 3, 0),
     ("fl", 5, 0), ("fl", 31, -2)],
)
def test_hecke_eigenvalues(form, p, expected) -> None:
    """±T(±p) with the sign of the branch."""
    assert hecke_eigenvalue(form, p) == expected


def test_hecke_examples_at_zero() -> None:
    """T_5 f_C(0) = 0, T_73 f_C(0) = 4, T_7 f_L(0) = 2f_L(0)."""
    assert hecke_qmf("fc", 5, 0) == 0
    assert hecke_qmf("fc", 73, 0) == 4
    assert hecke_qmf("fl", 7, 0) == eval_fl(0).exact * 2


@pytest.mark.parametrize("p", [5, 7, 11, 13, 23])
def test_fc_is_a_hecke_eigenform(p) -> None:
    """T_p f_C = λ_p f_C exactly at sample rationals."""
    eigenvalue = hecke_eigenvalue("fc", p)
    for x in FC_POINTS[:3]:
        assert hecke_qmf("fc", p, x) == eval_fc(x).exact * eigenvalue, x


@pytest.mark.parametrize("p", [3, 5, 7])
def test_fl_is_a_hecke_eigenform(p) -> None:
    """T_p f_L = λ_p f_L at twenty points of S₀ ∪ S_∞."""
    assert len(FL_SAMPLE) == 20
    assert all(
        x.denominator % 2 or x.denominator % 4 == 0 for x in FL_SAMPLE
    )
    eigenvalue = hecke_eigenvalue("fl", p)
    for x in FL_SAMPLE:
        assert hecke_qmf("fl", p, x) == eval_fl(x).exact * eigenvalue, x


def test_fl_eigenvalues_on_the_sample() -> None:
    """T_7 f_L = 2f_L while T_3 and T_5 annihilate f_L."""
    for x in FL_SAMPLE[::4]:
        assert hecke_qmf("fl", 7, x) == eval_fl(x).exact * 2, x
        assert hecke_qmf("fl", 3, x) == 0, x
        assert hecke_qmf("fl", 5, x) == 0, x


@pytest.mark.slow
@pytest.mark.parametrize("p", [11, 13, 19])
def test_fl_eigenform_for_larger_primes(p) -> None:
    """T_p f_L = λ_p f_L on the whole sample for larger primes."""
    eigenvalue = hecke_eigenvalue("fl", p)
    for x in FL_SAMPLE:
        assert hecke_qmf("fl", p, x) == eval_fl(x).exact * eigenvalue, x


def _fc_sample() -> list[Fraction]:
    """One point for every denominator 1..20, alternating in sign."""
    points = []
    for c in range(1, 21):
        a = next(a for a in range(1, c + 1) if sympy.gcd(a, c) == 1)
        points.append(Fraction(a if c % 2 else -a, c))
    return points


@pytest.mark.slow
@pytest.mark.parametrize("p", [5, 7, 11, 13, 17, 19, 23])
def test_fc_eigenform_over_all_denominators(p) -> None:
    """T_p f_C = λ_p f_C at points with every denominator up to 20."""
    points = _fc_sample()
    assert sorted(x.denominator for x in points) == list(range(1, 21))
    eigenvalue = hecke_eigenvalue("fc", p)
    for x in points:
        assert hecke_qmf("fc", p, x) == eval_fc(x).exact * eigenvalue, x


def test_hecke_rejects_bad_primes() -> None:
    """Composite primes and primes dividing the level are refused."""
    with pytest.raises(BadPrime):
        hecke_qmf("fc", 3, 0)
    with pytest.raises(BadPrime):
        hecke_qmf("fl", 9, 0)
    with pytest.raises(BadPrime):
        hecke_qmf("fl", 2, 0)


def test_cocycle_trivial_cases() -> None:
    """h vanishes for the identity and for T."""
    identity = Mat2.of(1, 0, 0, 1)
    for x in FC_POINTS:
        assert cocycle("fc", identity, x) == 0
        assert cocycle("fc", T, x) == 0
        assert cocycle("fl", T, x) == 0


def test_cocycle_is_finite_away_from_the_pole() -> None:
    """h for (1 0; 4 1) at x = 1 uses |4x + 1| = 5."""
    value = cocycle("fl", R4, 1)
    image = eval_fl(Fraction(1, 5)).exact * Fraction(1, 5)
    assert value == eval_fl(1).exact - cyc_make(8, -1) * image


def test_cocycle_pole_and_group_checks() -> None:
    """x = −d/c is a pole; non-members are refused."""
    with pytest.raises(PoleError):
        cocycle("fl", R4, Fraction(-1, 4))
    with pytest.raises(PoleError):
        cocycle("fc", R2, Fraction(-1, 2))
    with pytest.raises(NotInGroup):
        cocycle("fl", R2, 0)


@pytest.mark.parametrize("form, gamma, p", [("fl", R4, 7), ("fc", R2, 23)])
def test_hecke_cocycle_is_eigenvalue_multiple(form, gamma, p) -> None:
    """H_γ = λ_p·h_γ on a coarse grid."""
    eigenvalue = hecke_eigenvalue(form, p)
    for k in range(-9, 10, 3):
        x = Fraction(k, 9)
        assert cocycle(form, gamma, x, hecke_p=p) == (
            cocycle(form, gamma, x).exact * eigenvalue
        ), x


@pytest.mark.slow
def test_hecke_cocycle_on_full_grid() -> None:
    """H_L = 2h_L at all 200 points of the open grid on (−1, 1)."""
    grid = parse_grid("-1:1:200")
    assert len(grid) == 200
    assert all(-1 < x < 1 for x in grid)
    assert Fraction(-1, 4) not in grid
    for x in grid:
        assert cocycle("fl", R4, x, hecke_p=7) == (
            cocycle("fl", R4, x).exact * 2
        ), x


@pytest.mark.parametrize(("p", "expected"), [(73, 2), (97, -2), (5, 0)])
def test_identity_tc_examples(p, expected) -> None:
    """Root-of-unity sums for ±T_C(±p)."""
    assert identity_tc(p) == expected


@pytest.mark.parametrize(("p", "expected"), [(7, 2), (31, -2), (5, 0)])
def test_identity_tl_examples(p, expected) -> None:
    """Root-of-unity sums for ±T_L(±p)."""
    assert identity_tl(p) == expected


def test_identities_agree_with_formulas() -> None:
    """Both identities reproduce the Hecke eigenvalues on small primes."""
    for p in sympy.primerange(5, 54):
        assert identity_tc(p) == hecke_eigenvalue("fc", p), p
    for p in sympy.primerange(3, 32):
        assert identity_tl(p) == hecke_eigenvalue("fl", p), p


def test_identities_reject_small_primes() -> None:
    """identity_tc needs p ≥ 5 and identity_tl an odd prime."""
    with pytest.raises(BadPrime):
        identity_tc(3)
    with pytest.raises(BadPrime):
        identity_tl(2)

"""Evaluation of multiplier systems and of the compatibility function."""

from logging import Logger
import random

import sympy

from src.domain.errors import BadPrime, NotInDoubleCoset
from src.domain.models.cyclotomic import CycNumber
from src.domain.models.modular import Mat2
from src.domain.models.multipliers import CompatReport, MultiplierSystem
from src.domain.services.exact_arith import cyc_make
from src.domain.services.modular_group import (
    decompose_word,
    gamma0_generators,
    gamma0_member,
    generator_power,
    hecke_cosets,
    mat_inv,
    mat_mul,
    mat_prod,
    random_from_generators,
)


def nu_exponent(nu: MultiplierSystem, g: Mat2) -> int:
    """Return e with ν(g) = ζ_r^e, r the root order."""
    word = decompose_word(g, nu.level)
    return (nu.power * word.exponent_sum()) % nu.root_order


def nu_eval(nu: MultiplierSystem, g: Mat2) -> CycNumber:
    """Evaluate ν on g ∈ Γ₀(level).

    Raises:
        NotInGroup: If g ∉ Γ₀(level).
    """
    return cyc_make(nu.root_order, nu_exponent(nu, g))


def nu_power(nu: MultiplierSystem, k: int) -> MultiplierSystem:
    """Return ν^k with the power reduced modulo the root order."""
    return nu ** k


def alpha(p: int) -> Mat2:
    """α_p = (1 0; 0 p)."""
    return Mat2.of(1, 0, 0, p)


def conjugate_by_alpha(g: Mat2, p: int) -> Mat2:
    """α_p⁻¹·g·α_p = (a, b·p; c/p, d)."""
    a_p = alpha(p)
    return mat_prod(mat_inv(a_p), g, a_p)


def _check_prime(level: int, p: int) -> None:
    if not sympy.isprime(p) or level % p == 0:
        raise BadPrime(f"p={p} must be a prime not dividing {level}")


def beta_decomposition(index: int | None, p: int, level: int) -> tuple[Mat2, Mat2]:
    """Explicit (γ₁, γ₂) with β = γ₁·α_p·γ₂ for a coset representative.

    Args:
        index: j for β_j = α_p·T^j, or None for β_∞.
        p: Prime.
        level: 2 or 4.

    Returns:
        tuple[Mat2, Mat2]: γ₁, γ₂ ∈ Γ₀(level).
    """
    one = generator_power("T", 0, level)
    if index is not None:
        g1, g2 = one, generator_power("T", index, level)
        target = Mat2.of(1, index, 0, p)
    else:
        target = Mat2.of(p, 0, 0, 1)
        r_inv = generator_power("R", -1, level)
        if level == 2:
            gamma = mat_mul(generator_power("T", (p + 1) // 2, level), r_inv)
            g1, g2 = -gamma, gamma
        elif p % 4 == 1:
            m = (p - 1) // 4
            g1 = mat_mul(
                generator_power("T", m, level),
                generator_power("R", 1, level),
            )
            g2 = mat_mul(generator_power("T", -m, level), r_inv)
        else:
            gamma = mat_mul(generator_power("T", (p + 1) // 4, level), r_inv)
            g1, g2 = -gamma, gamma
    if mat_prod(g1, alpha(p), g2) != target:
        raise RuntimeError(f"Decomposition of {target} at level {level} failed")
    return g1, g2


def c_from_decomposition(
    nu: MultiplierSystem,
    nu2: MultiplierSystem,
    g1: Mat2,
    g2: Mat2,
) -> CycNumber:
    """c(γ₁·α·γ₂) = ν(γ₁)·ν′(γ₂)."""
    return nu_eval(nu, g1) * nu_eval(nu2, g2)


def c_value(
    nu: MultiplierSystem,
    nu2: MultiplierSystem,
    beta: Mat2,
    p: int,
) -> CycNumber:
    """Evaluate c_{ν,ν′} on β ∈ Γ₀(N)·α_p·Γ₀(N).

    β is first written as γ·β_k for a coset representative β_k; then
    c(β) = ν(γ)·c(β_k), with c(β_k) read off the explicit decomposition.

    Args:
        nu: Multiplier system ν.
        nu2: ν^p.
        beta: Element of the double coset.
        p: Prime.

    Returns:
        CycNumber: The value, a root of unity.

    Raises:
        NotInDoubleCoset: If β is outside the double coset.
    """
    _check_prime(nu.level, p)
    if nu2.level != nu.level or nu2.power != (nu.power * p) % nu.root_order:
        raise ValueError(f"{nu2} is not ν^{p} for {nu}")
    reps = hecke_cosets(p)
    for k, rep in enumerate(reps):
        gamma = mat_mul(beta, mat_inv(rep))
        if not gamma0_member(gamma, nu.level):
            continue
        index = k if k < p else None
        g1, g2 = beta_decomposition(index, p, nu.level)
        return nu_eval(nu, gamma) * c_from_decomposition(nu, nu2, g1, g2)
    raise NotInDoubleCoset(
        f"{beta} is not in Γ0({nu.level}) α_{p} Γ0({nu.level})"
    )


def compat_check(
    level: int,
    p: int,
    random_samples: int = 100,
    seed: int = 0,
    logger: Logger | None = None,
) -> CompatReport:
    """Check ν(γ) = ν(α_p⁻¹γα_p)^p on generators of Γ₀(level·p).

    A seeded sample of random products of the generators is checked as
    well. Failures are collected as witnesses rather than raised.
    """
    _check_prime(level, p)
    nu = MultiplierSystem.base(level)
    nu_p = nu_power(nu, p)
    generators = gamma0_generators(level * p)
    witnesses: list[Mat2] = []

    def _holds(g: Mat2) -> bool:
        return nu_eval(nu, g) == nu_eval(nu_p, conjugate_by_alpha(g, p))

    for g in generators:
        if not _holds(g):
            witnesses.append(g)
    rng = random.Random(seed * 1_000_003 + p)
    for _ in range(random_samples):
        g = random_from_generators(rng, generators)
        if not _holds(g):
            witnesses.append(g)
    if witnesses and logger is not None:
        logger.warning(
            f"Level {level}, p={p}: {len(witnesses)} compatibility failures"
        )
    return CompatReport(
        level=level,
        p=p,
        compatible=not witnesses,
        generators_checked=len(generators),
        random_checked=random_samples,
        witnesses=tuple(witnesses),
    )


__all__ = [
    "nu_exponent",
    "nu_eval",
    "nu_power",
    "alpha",
    "conjugate_by_alpha",
    "beta_decomposition",
    "c_from_decomposition",
    "c_value",
    "compat_check",
]

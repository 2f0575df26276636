"""Exact rational and cyclotomic arithmetic services."""

from collections.abc import Iterable
from fractions import Fraction
from math import lcm

import mpmath
import numpy as np

from src.domain.constants import DEFAULT_PRECISION, MIN_PRECISION
from src.domain.models.cyclotomic import CycNumber, CyclicSum, Rational

_OPS = {
    "add": lambda a, b: a + b,
    "sub": lambda a, b: a - b,
    "mul": lambda a, b: a * b,
}

# A term of a linear combination: weight · ζ_r^e · value, where the twist
# (r, e) may be None.
CombinationTerm = tuple[Rational, tuple[int, int] | None, "CycNumber | CyclicSum"]


def cyc_make(order: int, exponent: int) -> CycNumber:
    """Return ζ_order^exponent in canonical form.

    Args:
        order: Root order M ≥ 1.
        exponent: Any integer; reduced mod M.

    Returns:
        CycNumber: The root of unity.
    """
    if order < 1:
        raise ValueError(f"Root order must be positive, got {order}")
    return CycNumber.from_exponents(order, {exponent % order: 1})


def cyc_arith(a: CycNumber, b: CycNumber, op: str) -> CycNumber:
    """Apply ``op`` ∈ {add, sub, mul} at the lcm of the two orders."""
    try:
        fn = _OPS[op]
    except KeyError as exc:
        raise ValueError(f"Unknown cyclotomic operation '{op}'") from exc
    return fn(a, b)


def cyc_embed(a: CycNumber, precision: int = DEFAULT_PRECISION) -> mpmath.mpc:
    """Evaluate ``a`` under ζ_M ↦ e^(2πi/M).

    Args:
        a: Exact value.
        precision: Working precision in significant decimal digits.

    Returns:
        mpmath.mpc: The complex embedding.
    """
    if precision < MIN_PRECISION:
        raise ValueError(
            f"Precision must be at least {MIN_PRECISION}, got {precision}"
        )
    with mpmath.workdps(precision + 5):
        total = mpmath.mpc(0)
        for k, coef in enumerate(a.coeffs):
            if not coef:
                continue
            value = Fraction(coef)
            scalar = mpmath.mpf(value.numerator) / value.denominator
            total += scalar * mpmath.expjpi(mpmath.mpf(2 * k) / a.order)
    with mpmath.workdps(precision):
        return +total


def cyc_is_rational(a: CycNumber) -> Fraction | None:
    """Return the rational value of ``a`` or None when a ∉ Q."""
    return a.rational_value()


def cyc_sum(terms: Iterable[CombinationTerm]) -> CycNumber:
    """Exact linear combination Σ weight·ζ_r^e·value reduced once.

    Values may be canonical ``CycNumber``s or unreduced ``CyclicSum``s; all
    are accumulated in the group ring of the common order and reduced modulo
    the cyclotomic polynomial a single time.

    Args:
        terms: Iterable of (weight, twist, value) with twist = (r, e) or None.

    Returns:
        CycNumber: The combination.
    """
    items = list(terms)
    if not items:
        return CycNumber.rational(0)
    target = 1
    for _, twist, value in items:
        target = lcm(target, value.order)
        if twist is not None:
            target = lcm(target, twist[0])
    acc = np.zeros(target, dtype=object)
    for weight, twist, value in items:
        if isinstance(value, CyclicSum):
            dense = value.embed(target).coeffs
        else:
            dense = value.dense(target)
        shift = 0
        if twist is not None:
            root_order, exponent = twist
            shift = (exponent * (target // root_order)) % target
        scalar = Fraction(weight)
        if scalar.denominator == 1:
            scalar = scalar.numerator
        acc = acc + scalar * np.roll(dense, shift)
    return CycNumber.from_dense(target, acc)


__all__ = [
    "CombinationTerm",
    "cyc_make",
    "cyc_arith",
    "cyc_embed",
    "cyc_is_rational",
    "cyc_sum",
]

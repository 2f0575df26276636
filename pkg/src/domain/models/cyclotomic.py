"""Exact elements of cyclotomic fields and of cyclic group rings.

A ``CycNumber`` of order M stores the unique remainder of its value modulo
the M-th cyclotomic polynomial, written in the power basis
1, ζ_M, …, ζ_M^(φ(M)−1). Equality and the zero test are therefore exact.

A ``CyclicSum`` is the working representation used inside long sums: a
dense coefficient vector of Q[X]/(X^M − 1). Multiplying it by a binomial
1 ± X^e costs O(M), and it is reduced to a ``CycNumber`` only once at the
end.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import lcm

import numpy as np
import sympy

Rational = int | Fraction


@lru_cache(maxsize=None)
def radical(m: int) -> int:
    """Return the product of the distinct primes dividing m."""
    out = 1
    for prime in sympy.primefactors(m):
        out *= int(prime)
    return out


@lru_cache(maxsize=None)
def totient(m: int) -> int:
    """Return Euler's φ(m)."""
    return int(sympy.totient(m))


@lru_cache(maxsize=None)
def cyclotomic_coefficients(r: int) -> tuple[int, ...]:
    """Return the coefficients of Φ_r, constant term first.

    Args:
        r: Positive integer.

    Returns:
        tuple[int, ...]: Integer coefficients of the monic polynomial Φ_r.
    """
    x = sympy.Symbol("x")
    poly = sympy.Poly(sympy.cyclotomic_poly(r, x), x)
    return tuple(int(c) for c in reversed(poly.all_coeffs()))


def _zeros(n: int) -> np.ndarray:
    return np.zeros(n, dtype=object)


def _normalize(value):
    if isinstance(value, Fraction) and value.denominator == 1:
        return value.numerator
    return value


def reduce_group_ring(dense: np.ndarray, order: int) -> tuple:
    """Reduce a vector of Q[X]/(X^M − 1) modulo Φ_M.

    Φ_M(X) = Φ_r(X^t) with r = rad(M) and t = M / r, so the division splits
    into t independent divisions by Φ_r acting on the rows of an r × t view.

    Args:
        dense: Coefficient vector of length ``order``.
        order: The modulus M.

    Returns:
        tuple: The φ(M) canonical coefficients.
    """
    r = radical(order)
    t = order // r
    phi_r = cyclotomic_coefficients(r)
    deg = len(phi_r) - 1
    rows = np.array(dense, dtype=object).reshape(r, t)
    taps = [(j, c) for j, c in enumerate(phi_r[:-1]) if c]
    for i in range(r - 1, deg - 1, -1):
        lead = rows[i].copy()
        if not any(lead):
            continue
        for j, c in taps:
            rows[i - deg + j] = rows[i - deg + j] - c * lead
        rows[i] = _zeros(t)
    return tuple(_normalize(c) for c in rows[:deg].reshape(-1))


class CycNumber:
    """Immutable exact element of Q(ζ_M) in canonical form."""

    __slots__ = ("_order", "_coeffs")

    def __init__(self, order: int, coeffs: tuple) -> None:
        if order < 1:
            raise ValueError(f"Cyclotomic order must be positive, got {order}")
        if len(coeffs) != totient(order):
            raise ValueError(
                f"Order {order} needs {totient(order)} coefficients, "
                f"got {len(coeffs)}"
            )
        self._order = order
        self._coeffs = tuple(coeffs)

    @classmethod
    def from_dense(cls, order: int, dense) -> CycNumber:
        """Reduce a group-ring vector of length ``order``."""
        return cls(order, reduce_group_ring(dense, order))

    @classmethod
    def from_exponents(
        cls,
        order: int,
        terms: dict[int, Rational],
    ) -> CycNumber:
        """Build Σ terms[k]·ζ_order^k."""
        dense = _zeros(order)
        for exponent, coef in terms.items():
            dense[exponent % order] += coef
        return cls.from_dense(order, dense)

    @classmethod
    def rational(cls, value: Rational) -> CycNumber:
        """Embed a rational number as an element of Q(ζ_1) = Q."""
        return cls(1, (_normalize(Fraction(value)),))

    @property
    def order(self) -> int:
        return self._order

    @property
    def coeffs(self) -> tuple:
        return self._coeffs

    def dense(self, order: int | None = None) -> np.ndarray:
        """Return the group-ring vector of this value at a multiple order."""
        target = order or self._order
        if target % self._order:
            raise ValueError(
                f"Order {target} is not a multiple of {self._order}"
            )
        step = target // self._order
        out = _zeros(target)
        for k, coef in enumerate(self._coeffs):
            if coef:
                out[k * step] = coef
        return out

    def embed(self, order: int) -> CycNumber:
        """Rewrite the value in Q(ζ_order), order a multiple of self.order."""
        if order == self._order:
            return self
        return CycNumber.from_dense(order, self.dense(order))

    def is_zero(self) -> bool:
        return not any(self._coeffs)

    def rational_value(self) -> Fraction | None:
        """Return the value as a Fraction when it lies in Q."""
        if any(self._coeffs[1:]):
            return None
        return Fraction(self._coeffs[0])

    def conjugate(self) -> CycNumber:
        """Complex conjugate, ζ_M ↦ ζ_M^(−1)."""
        dense = self.dense()
        idx = (-np.arange(self._order)) % self._order
        return CycNumber.from_dense(self._order, dense[idx])

    def scale(self, factor: Rational) -> CycNumber:
        factor = Fraction(factor)
        return CycNumber(
            self._order,
            tuple(_normalize(c * factor) for c in self._coeffs),
        )

    def times_root(self, order: int, exponent: int) -> CycNumber:
        """Multiply by ζ_order^exponent."""
        target = lcm(self._order, order)
        dense = np.roll(self.dense(target), exponent * (target // order))
        return CycNumber.from_dense(target, dense)

    def _unify(self, other: CycNumber) -> tuple[int, np.ndarray, np.ndarray]:
        target = lcm(self._order, other._order)
        return target, self.dense(target), other.dense(target)

    @staticmethod
    def _coerce(value) -> CycNumber | None:
        if isinstance(value, CycNumber):
            return value
        if isinstance(value, (int, Fraction)):
            return CycNumber.rational(value)
        return None

    def __add__(self, other) -> CycNumber:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        if rhs._order == self._order:
            return CycNumber(
                self._order,
                tuple(
                    _normalize(a + b)
                    for a, b in zip(self._coeffs, rhs._coeffs)
                ),
            )
        target, a, b = self._unify(rhs)
        return CycNumber.from_dense(target, a + b)

    __radd__ = __add__

    def __neg__(self) -> CycNumber:
        return CycNumber(self._order, tuple(-c for c in self._coeffs))

    def __sub__(self, other) -> CycNumber:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self + (-rhs)

    def __rsub__(self, other) -> CycNumber:
        lhs = self._coerce(other)
        if lhs is None:
            return NotImplemented
        return lhs - self

    def __mul__(self, other) -> CycNumber:
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, CycNumber):
            return NotImplemented
        target, a, b = self._unify(other)
        # Iterate over the sparser operand.
        if sum(1 for c in a if c) > sum(1 for c in b if c):
            a, b = b, a
        out = _zeros(target)
        for k, coef in enumerate(a):
            if coef:
                out = out + coef * np.roll(b, k)
        return CycNumber.from_dense(target, out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> CycNumber:
        if exponent < 0:
            raise ValueError("Negative powers are not supported")
        result = CycNumber.rational(1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other) -> bool:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        if rhs._order == self._order:
            return self._coeffs == rhs._coeffs
        return (self - rhs).is_zero()

    __hash__ = None

    def __str__(self) -> str:
        terms = []
        for k, coef in enumerate(self._coeffs):
            if not coef:
                continue
            if k == 0:
                terms.append(f"{coef}")
            else:
                terms.append(f"{coef}*z{self._order}^{k}")
        return " + ".join(terms).replace("+ -", "- ") if terms else "0"

    def __repr__(self) -> str:
        return f"CycNumber(order={self._order}, value={self})"


class CyclicSum:
    """Mutable accumulator in the group ring Q[X]/(X^M − 1)."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs: np.ndarray | None = None) -> None:
        self.order = order
        self.coeffs = _zeros(order) if coeffs is None else coeffs

    @classmethod
    def monomial(
        cls,
        order: int,
        exponent: int = 0,
        coef: Rational = 1,
    ) -> CyclicSum:
        out = cls(order)
        out.coeffs[exponent % order] = coef
        return out

    def copy(self) -> CyclicSum:
        return CyclicSum(self.order, self.coeffs.copy())

    def mul_binomial(self, sign: int, exponent: int) -> CyclicSum:
        """In place: multiply by 1 + sign·X^exponent."""
        shifted = np.roll(self.coeffs, exponent % self.order)
        self.coeffs = self.coeffs + sign * shifted
        return self

    def mul_monomial(self, exponent: int, coef: Rational = 1) -> CyclicSum:
        """In place: multiply by coef·X^exponent."""
        self.coeffs = coef * np.roll(self.coeffs, exponent % self.order)
        return self

    def add_scaled(
        self,
        other: CyclicSum,
        coef: Rational = 1,
        shift: int = 0,
    ) -> CyclicSum:
        """In place: add coef·X^shift·other (same order)."""
        if other.order != self.order:
            raise ValueError(
                f"Group ring orders differ: {self.order} vs {other.order}"
            )
        self.coeffs = self.coeffs + coef * np.roll(
            other.coeffs,
            shift % self.order,
        )
        return self

    def embed(self, order: int) -> CyclicSum:
        """Return the image under X ↦ X^(order/self.order)."""
        if order % self.order:
            raise ValueError(f"Order {order} is not a multiple of {self.order}")
        out = _zeros(order)
        out[np.arange(self.order) * (order // self.order)] = self.coeffs
        return CyclicSum(order, out)

    def is_zero_in_ring(self) -> bool:
        return not any(self.coeffs)

    def reduce(self) -> CycNumber:
        return CycNumber.from_dense(self.order, self.coeffs)


__all__ = [
    "Rational",
    "CycNumber",
    "CyclicSum",
    "radical",
    "totient",
    "cyclotomic_coefficients",
    "reduce_group_ring",
]

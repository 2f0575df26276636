"""Truncated formal power series with exact coefficients."""

from __future__ import annotations

from collections.abc import Iterator
from dataclasses import dataclass, field
from fractions import Fraction

from src.domain.models.cyclotomic import Rational


@dataclass
class TruncSeries:
    """Σ coeffs[k]·q^(leading + k) for 0 ≤ k ≤ order.

    Coefficients past ``order`` are never stored. Products, binomial
    multiplications and binomial divisions are exact to that order; the
    divisions by 1 ± q^e (e ≥ 1) are legal because those factors are
    units of the power series ring.

    Attributes:
        order: Highest retained index k.
        coeffs: Integer or Fraction coefficients, length order + 1.
        leading: Exponent of the first coefficient (e.g. 1/24, −1/24).
    """

    order: int
    coeffs: list[Rational] = field(default_factory=list)
    leading: Fraction = Fraction(0)

    def __post_init__(self) -> None:
        if self.order < 0:
            raise ValueError(f"Truncation order must be ≥ 0, got {self.order}")
        self.leading = Fraction(self.leading)
        size = self.order + 1
        self.coeffs = (list(self.coeffs) + [0] * size)[:size]

    @classmethod
    def zero(cls, order: int, leading: Fraction | int = 0) -> TruncSeries:
        return cls(order, [], Fraction(leading))

    @classmethod
    def monomial(
        cls,
        order: int,
        exponent: int = 0,
        coef: Rational = 1,
    ) -> TruncSeries:
        """coef·q^exponent truncated at ``order``."""
        out = cls.zero(order)
        if 0 <= exponent <= order:
            out.coeffs[exponent] = coef
        return out

    def copy(self) -> TruncSeries:
        return TruncSeries(self.order, list(self.coeffs), self.leading)

    def __getitem__(self, k: int) -> Rational:
        return self.coeffs[k] if 0 <= k <= self.order else 0

    def items(self) -> Iterator[tuple[Fraction, Rational]]:
        """Yield (exponent, coefficient) for the stored nonzero terms."""
        for k, coef in enumerate(self.coeffs):
            if coef:
                yield self.leading + k, coef

    def _check_compatible(self, other: TruncSeries) -> None:
        if self.leading != other.leading:
            raise ValueError(
                f"Leading exponents differ: {self.leading} vs {other.leading}"
            )

    def __add__(self, other: TruncSeries) -> TruncSeries:
        self._check_compatible(other)
        order = min(self.order, other.order)
        return TruncSeries(
            order,
            [self.coeffs[k] + other.coeffs[k] for k in range(order + 1)],
            self.leading,
        )

    def __neg__(self) -> TruncSeries:
        return TruncSeries(self.order, [-c for c in self.coeffs], self.leading)

    def __sub__(self, other: TruncSeries) -> TruncSeries:
        return self + (-other)

    def __mul__(self, other) -> TruncSeries:
        if isinstance(other, (int, Fraction)):
            return TruncSeries(
                self.order,
                [c * other for c in self.coeffs],
                self.leading,
            )
        if not isinstance(other, TruncSeries):
            return NotImplemented
        order = min(self.order, other.order)
        out = [0] * (order + 1)
        for i, a in enumerate(self.coeffs[: order + 1]):
            if not a:
                continue
            for j in range(order + 1 - i):
                b = other.coeffs[j]
                if b:
                    out[i + j] += a * b
        return TruncSeries(order, out, self.leading + other.leading)

    __rmul__ = __mul__

    def iadd_scaled(self, other: TruncSeries, coef: Rational = 1) -> TruncSeries:
        """In place: self += coef·other."""
        self._check_compatible(other)
        for k in range(min(self.order, other.order) + 1):
            if other.coeffs[k]:
                self.coeffs[k] += coef * other.coeffs[k]
        return self

    def mul_binomial(self, sign: int, exponent: int) -> TruncSeries:
        """In place: multiply by 1 + sign·q^exponent (exponent ≥ 1)."""
        c = self.coeffs
        for k in range(self.order, exponent - 1, -1):
            if c[k - exponent]:
                c[k] += sign * c[k - exponent]
        return self

    def div_binomial(self, sign: int, exponent: int) -> TruncSeries:
        """In place: divide by 1 + sign·q^exponent (exponent ≥ 1)."""
        if exponent < 1:
            raise ValueError(f"Cannot divide by 1 ± q^{exponent}")
        c = self.coeffs
        for k in range(exponent, self.order + 1):
            if c[k - exponent]:
                c[k] -= sign * c[k - exponent]
        return self

    def shift(self, exponent: int, coef: Rational = 1) -> TruncSeries:
        """In place: multiply by coef·q^exponent (exponent ≥ 0)."""
        if exponent < 0:
            raise ValueError("Negative shifts change the leading exponent")
        self.coeffs = (
            [0] * exponent + [coef * c for c in self.coeffs]
        )[: self.order + 1]
        return self

    def is_zero_beyond(self, k: int) -> bool:
        """True when every stored coefficient past index k vanishes."""
        return not any(self.coeffs[k + 1 :])

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncSeries):
            return NotImplemented
        order = min(self.order, other.order)
        return (
            self.leading == other.leading
            and self.coeffs[: order + 1] == other.coeffs[: order + 1]
        )


__all__ = ["TruncSeries"]

"""Value types for the modular group and its congruence subgroups."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm


@dataclass(frozen=True)
class Mat2:
    """2×2 matrix (a b; c d) with rational entries and positive determinant.

    Attributes:
        a: Upper-left entry.
        b: Upper-right entry.
        c: Lower-left entry.
        d: Lower-right entry.
    """

    a: Fraction
    b: Fraction
    c: Fraction
    d: Fraction

    def __post_init__(self) -> None:
        for name in ("a", "b", "c", "d"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))
        if self.det <= 0:
            raise ValueError(
                f"Matrix ({self.a} {self.b}; {self.c} {self.d}) "
                "must have positive determinant"
            )

    @classmethod
    def of(cls, a, b, c, d) -> Mat2:
        return cls(Fraction(a), Fraction(b), Fraction(c), Fraction(d))

    @property
    def det(self) -> Fraction:
        return self.a * self.d - self.b * self.c

    def entries(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return (self.a, self.b, self.c, self.d)

    def is_integral(self) -> bool:
        return all(x.denominator == 1 for x in self.entries())

    def __neg__(self) -> Mat2:
        return Mat2(-self.a, -self.b, -self.c, -self.d)

    def __str__(self) -> str:
        return f"({self.a} {self.b}; {self.c} {self.d})"


@dataclass(frozen=True)
class ProjectivePoint:
    """Point (a : c) of P¹(Q) with gcd(a, c) = 1 and c ≥ 0; ∞ = (1 : 0)."""

    a: int
    c: int

    @classmethod
    def from_pair(cls, a: Fraction | int, c: Fraction | int) -> ProjectivePoint:
        """Normalize an arbitrary nonzero rational pair."""
        a, c = Fraction(a), Fraction(c)
        if a == 0 and c == 0:
            raise ValueError("(0 : 0) is not a point of P¹(Q)")
        scale = lcm(a.denominator, c.denominator)
        num, den = int(a * scale), int(c * scale)
        g = gcd(num, den)
        num, den = num // g, den // g
        if den < 0 or (den == 0 and num < 0):
            num, den = -num, -den
        return cls(num, den)

    @classmethod
    def from_rational(cls, x: Fraction | int) -> ProjectivePoint:
        x = Fraction(x)
        return cls(x.numerator, x.denominator)

    @property
    def is_infinity(self) -> bool:
        return self.c == 0

    def as_fraction(self) -> Fraction:
        if self.is_infinity:
            raise ValueError("∞ has no rational value")
        return Fraction(self.a, self.c)

    def __str__(self) -> str:
        if self.is_infinity:
            return "∞"
        if self.c == 1:
            return f"{self.a}"
        return f"{self.a}/{self.c}"


INFINITY = ProjectivePoint(1, 0)


@dataclass(frozen=True)
class GenWord:
    """Word in the generators T and R of Γ₀(level) times a central sign.

    Attributes:
        level: 2 or 4; fixes R = (1 0; level 1).
        letters: Ordered (generator name, exponent) pairs.
        sign: +1 or −1.
    """

    level: int
    letters: tuple[tuple[str, int], ...]
    sign: int = 1

    def exponent_sum(self) -> int:
        return sum(exp for _, exp in self.letters)

    def __len__(self) -> int:
        return len(self.letters)


@dataclass(frozen=True)
class CuspClass:
    """Γ₀(level)-orbit of a point of P¹(Q), named by its representative."""

    level: int
    representative: ProjectivePoint

    def __str__(self) -> str:
        return str(self.representative)


__all__ = [
    "Mat2",
    "ProjectivePoint",
    "INFINITY",
    "GenWord",
    "CuspClass",
]

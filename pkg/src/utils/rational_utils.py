"""Helpers for parsing command-line numbers and flattening results."""

from fractions import Fraction

import mpmath


def parse_rational(value: str) -> Fraction:
    """Parse ``a/c`` (or an integer, or a decimal) into a Fraction.

    Raises:
        ValueError: If the text is not a rational number.
    """
    text = str(value).strip()
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"Invalid rational '{value}'. Expected a/c.") from exc


def parse_grid(value: str) -> list[Fraction]:
    """Parse ``lo:hi:count`` into the midpoints of count equal cells of (lo, hi).

    Points are lo + (2k + 1)·(hi − lo)/(2·count) for 0 ≤ k < count, so neither
    endpoint is on the grid.
    """
    parts = str(value).split(":")
    if len(parts) != 3:
        raise ValueError(f"Invalid grid '{value}'. Expected lo:hi:count.")
    lo, hi = parse_rational(parts[0]), parse_rational(parts[1])
    try:
        count = int(parts[2])
    except ValueError as exc:
        raise ValueError(f"Invalid grid count '{parts[2]}'") from exc
    if count < 1 or hi <= lo:
        raise ValueError(f"Empty grid '{value}'")
    half = (hi - lo) / (2 * count)
    return [lo + (2 * k + 1) * half for k in range(count)]


def parse_integers(value: str, count: int) -> tuple[int, ...]:
    """Parse ``count`` comma separated integers, e.g. a matrix ``a,b,c,d``."""
    parts = [p.strip() for p in str(value).split(",")]
    if len(parts) != count:
        raise ValueError(
            f"Expected {count} comma separated integers, got '{value}'"
        )
    try:
        return tuple(int(p) for p in parts)
    except ValueError as exc:
        raise ValueError(f"Invalid integer list '{value}'") from exc


def parse_point(value: str) -> tuple[float, float]:
    """Parse ``x,y`` into a point of the upper half plane."""
    parts = [p.strip() for p in str(value).split(",")]
    if len(parts) != 2:
        raise ValueError(f"Invalid point '{value}'. Expected x,y.")
    x, y = (float(p) for p in parts)
    if y <= 0:
        raise ValueError(f"Point '{value}' is not in the upper half plane")
    return x, y


def complex_parts(value) -> tuple[float, float]:
    """Real and imaginary parts of an mpmath or Python number as floats."""
    z = mpmath.mpmathify(value)
    return float(mpmath.re(z)), float(mpmath.im(z))


def rational_text(value) -> str | int:
    """Integers stay integers; other rationals become ``a/c`` strings."""
    value = Fraction(value)
    if value.denominator == 1:
        return value.numerator
    return str(value)


__all__ = [
    "parse_rational",
    "parse_grid",
    "parse_integers",
    "parse_point",
    "complex_parts",
    "rational_text",
]

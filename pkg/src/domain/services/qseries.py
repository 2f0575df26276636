"""Exact expansions of σ, σ*, W₁, W₂ and the coefficient combinations."""

from enum import Enum
from fractions import Fraction

from src.domain.models.series import TruncSeries


class WSeries(str, Enum):
    W1 = "w1"
    W2 = "w2"
    W1ALT = "w1alt"


def _check_order(N: int) -> None:
    if N < 1:
        raise ValueError(f"Series order must be ≥ 1, got {N}")


def series_sigma(N: int) -> TruncSeries:
    """σ(q) = 1 + Σ_{n≥1} q^{n(n+1)/2} / ((1+q)(1+q²)⋯(1+q^n)) to q^N."""
    _check_order(N)
    out = TruncSeries.monomial(N, 0, 1)
    term = TruncSeries.monomial(N, 0, 1)
    n = 1
    while n * (n + 1) // 2 <= N:
        term.shift(n).div_binomial(1, n)
        out.iadd_scaled(term)
        n += 1
    return out


def series_sigma_star(N: int) -> TruncSeries:
    """σ*(q) = 2Σ_{n≥1} (−1)^n q^{n²} / ((1−q)(1−q³)⋯(1−q^{2n−1}))."""
    _check_order(N)
    out = TruncSeries.zero(N)
    term = TruncSeries.monomial(N, 0, 1)
    n = 1
    while n * n <= N:
        term.shift(2 * n - 1, -1).div_binomial(-1, 2 * n - 1)
        out.iadd_scaled(term, 2)
        n += 1
    return out


def series_sigma_star_dual(N: int) -> TruncSeries:
    """σ*(q) = −2Σ_{n≥0} q^{n+1}(1−q²)(1−q⁴)⋯(1−q^{2n}).

    Quadratic in N; meant as an independent check at moderate orders.
    """
    _check_order(N)
    out = [0] * (N + 1)
    poch = TruncSeries.monomial(N, 0, 1)
    for n in range(N):
        if n:
            poch.mul_binomial(-1, 2 * n)
        for k in range(N - n):
            if poch.coeffs[k]:
                out[k + n + 1] -= 2 * poch.coeffs[k]
    return TruncSeries(N, out)


def series_sigma_adh(N: int) -> TruncSeries:
    """σ(q) from the indefinite theta double sum.

    σ(q) = Σ_{n≥0} Σ_{|j|≤n} (−1)^{n+j} q^{n(3n+1)/2 − j²}(1 − q^{2n+1}).
    The smallest exponent in row n is n(n+1)/2.
    """
    _check_order(N)
    coeffs = [0] * (N + 1)
    n = 0
    while n * (n + 1) // 2 <= N:
        top = n * (3 * n + 1) // 2
        for j in range(-n, n + 1):
            sign = -1 if (n + j) % 2 else 1
            e = top - j * j
            if e <= N:
                coeffs[e] += sign
            if e + 2 * n + 1 <= N:
                coeffs[e + 2 * n + 1] -= sign
        n += 1
    return TruncSeries(N, coeffs)


def _series_w1(N: int) -> TruncSeries:
    out = TruncSeries.monomial(N, 0, 1)
    term = TruncSeries.monomial(N, 0, 1)
    n = 1
    while n * (n + 1) // 2 <= N:
        term.mul_binomial(-1, n).div_binomial(1, n).shift(n, -1)
        out.iadd_scaled(term)
        n += 1
    return out


def _series_w2(N: int) -> TruncSeries:
    out = TruncSeries.zero(N)
    term = TruncSeries.monomial(N, 0, 1)
    for n in range(1, N + 1):
        if n == 1:
            term = term * 2
        else:
            term.mul_binomial(1, 2 * n - 2)
        term.div_binomial(-1, 2 * n - 1).shift(1, -1)
        out.iadd_scaled(term)
    return out


def _series_w1_alt(N: int) -> TruncSeries:
    out = TruncSeries.monomial(N, 0, 1)
    term = TruncSeries.monomial(N, 0, 1)
    for n in range(1, N + 1):
        term.mul_binomial(-1, 2 * n - 1).div_binomial(1, 2 * n).shift(1, -1)
        out.iadd_scaled(term)
    return out


_W_BUILDERS = {
    WSeries.W1: _series_w1,
    WSeries.W2: _series_w2,
    WSeries.W1ALT: _series_w1_alt,
}


def series_w(which: WSeries | str, N: int) -> TruncSeries:
    """W₁, W₂ or the alternate form of W₁ to order N.

    W₁(q) = Σ_{n≥0} (q)_n (−1)^n q^{n(n+1)/2} / (−q)_n,
    W₂(q) = Σ_{n≥1} (−1; q²)_n (−q)^n / (q; q²)_n,
    W₁(q) = Σ_{n≥0} (q; q²)_n (−q)^n / (−q²; q²)_n.
    """
    _check_order(N)
    if not isinstance(which, WSeries):
        which = WSeries(which.lower())
    return _W_BUILDERS[which](N)


def _read_signed(
    series: TruncSeries,
    leading: Fraction,
    scale: int,
    out: dict[int, int],
    start: int = 0,
) -> None:
    """Store coefficient k under n = ±scale·(leading + k), sign of leading."""
    sign = 1 if leading > 0 else -1
    for k in range(start, series.order + 1):
        out[sign * int((leading + k) * scale)] = int(series[k])


def combine_phi(N: int) -> dict[int, int]:
    """T_C(n) for n ≡ 1 (mod 24), |n| ≤ N, read off φ(q).

    φ(q) = q^{1/24}σ(q) + q^{−1/24}σ*(q) = Σ T_C(n) q^{|n|/24}: positive n
    come from the σ branch, negative n from the σ* branch.
    """
    _check_order(N)
    out: dict[int, int] = {}
    plus = series_sigma(max((N - 1) // 24, 1))
    _read_signed(plus, Fraction(1, 24), 24, out)
    minus = series_sigma_star(max((N + 1) // 24, 1))
    # σ* has no constant term; k = 0 would collide with n = 1.
    _read_signed(minus, Fraction(-1, 24), 24, out, start=1)
    return {n: v for n, v in out.items() if abs(n) <= N}


def combine_w(N: int) -> dict[int, int]:
    """T_L(n) for n ≡ 1 (mod 8), |n| ≤ N, from qW₁(q⁸) + q⁻¹W₂(q⁸)."""
    _check_order(N)
    out: dict[int, int] = {}
    w1 = series_w(WSeries.W1, max((N - 1) // 8, 1))
    _read_signed(w1, Fraction(1, 8), 8, out)
    w2 = series_w(WSeries.W2, max((N + 1) // 8, 1))
    _read_signed(w2, Fraction(-1, 8), 8, out, start=1)
    return {n: v for n, v in out.items() if abs(n) <= N}


__all__ = [
    "WSeries",
    "series_sigma",
    "series_sigma_star",
    "series_sigma_star_dual",
    "series_sigma_adh",
    "series_w",
    "combine_phi",
    "combine_w",
]

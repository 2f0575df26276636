"""Matrix algebra, word decomposition and cusps for Γ₀(N)."""

from collections import deque
from fractions import Fraction
from functools import lru_cache
from math import floor, gcd
import random

import mpmath
import sympy

from src.domain.constants import SUPPORTED_LEVELS
from src.domain.errors import BadPrime, NotInGroup
from src.domain.models.modular import (
    INFINITY,
    CuspClass,
    GenWord,
    Mat2,
    ProjectivePoint,
)

IDENTITY = Mat2.of(1, 0, 0, 1)
MINUS_IDENTITY = Mat2.of(-1, 0, 0, -1)
S = Mat2.of(0, -1, 1, 0)
T = Mat2.of(1, 1, 0, 1)


def generator_r(level: int) -> Mat2:
    """Return R = (1 0; level 1)."""
    return Mat2.of(1, 0, level, 1)


def generator_power(name: str, exponent: int, level: int) -> Mat2:
    """Return T^exponent or R^exponent in closed form."""
    if name == "T":
        return Mat2.of(1, exponent, 0, 1)
    if name == "R":
        return Mat2.of(1, 0, level * exponent, 1)
    raise ValueError(f"Unknown generator '{name}'")


def mat_mul(g: Mat2, h: Mat2) -> Mat2:
    return Mat2(
        g.a * h.a + g.b * h.c,
        g.a * h.b + g.b * h.d,
        g.c * h.a + g.d * h.c,
        g.c * h.b + g.d * h.d,
    )


def mat_inv(g: Mat2) -> Mat2:
    det = g.det
    return Mat2(g.d / det, -g.b / det, -g.c / det, g.a / det)


def mat_prod(*factors: Mat2) -> Mat2:
    out = IDENTITY
    for factor in factors:
        out = mat_mul(out, factor)
    return out


def mat_act(g: Mat2, z):
    """Apply the Möbius transformation of ``g`` to ``z``.

    Args:
        g: Matrix.
        z: A ``ProjectivePoint``, a rational (int or Fraction) or a point of
            the upper half plane (complex or mpmath.mpc).

    Returns:
        The image: ``ProjectivePoint`` for projective input, Fraction or
        ``INFINITY`` for rational input, mpmath.mpc for complex input.
    """
    if isinstance(z, ProjectivePoint):
        return ProjectivePoint.from_pair(
            g.a * z.a + g.b * z.c,
            g.c * z.a + g.d * z.c,
        )
    if isinstance(z, (int, Fraction)):
        image = mat_act(g, ProjectivePoint.from_rational(z))
        return image if image.is_infinity else image.as_fraction()
    w = mpmath.mpmathify(z)
    a, b, c, d = (
        mpmath.mpf(x.numerator) / x.denominator for x in g.entries()
    )
    return (a * w + b) / (c * w + d)


def gamma0_member(g: Mat2, N: int) -> bool:
    """True iff g has integer entries, det 1 and c ≡ 0 mod N."""
    return g.is_integral() and g.det == 1 and int(g.c) % N == 0


def reconstruct(word: GenWord) -> Mat2:
    """Multiply a generator word back into a matrix."""
    out = IDENTITY
    for name, exponent in word.letters:
        out = mat_mul(out, generator_power(name, exponent, word.level))
    return out if word.sign == 1 else -out


def _nearest(num: int, den: int) -> int:
    """Nearest integer to num/den, ties rounded toward zero."""
    q = Fraction(num, den)
    low = floor(q)
    frac = q - low
    if frac > Fraction(1, 2):
        return low + 1
    if frac < Fraction(1, 2):
        return low
    return low if q > 0 else low + 1


def _append(letters: list[tuple[str, int]], name: str, exponent: int) -> None:
    if not exponent:
        return
    if letters and letters[-1][0] == name:
        merged = letters[-1][1] + exponent
        letters.pop()
        if merged:
            letters.append((name, merged))
        return
    letters.append((name, exponent))


def decompose_word(g: Mat2, level: int) -> GenWord:
    """Write g ∈ Γ₀(level) as a word in T and R times ±I.

    Euclidean descent on the first column: left-multiplying by T^(−n)
    shrinks |a| to at most |c|/2, then R^(−m) makes |c| strictly smaller.
    When c reaches 0 the remainder is ±T^b.

    Args:
        g: Group element.
        level: 2 or 4.

    Returns:
        GenWord: A word whose reconstruction is exactly g.

    Raises:
        NotInGroup: If g ∉ Γ₀(level).
    """
    if level not in SUPPORTED_LEVELS:
        raise ValueError(f"Word decomposition needs level 2 or 4, got {level}")
    if not gamma0_member(g, level):
        raise NotInGroup(f"{g} is not in Γ0({level})")
    a, b, c, d = (int(x) for x in g.entries())
    letters: list[tuple[str, int]] = []
    while c != 0:
        n = _nearest(a, c)
        a, b = a - n * c, b - n * d
        _append(letters, "T", n)
        if a == 0:
            raise NotInGroup(f"{g} reached a zero pivot at level {level}")
        m = _nearest(c, level * a)
        c, d = c - level * m * a, d - level * m * b
        _append(letters, "R", m)
    sign = a
    _append(letters, "T", b * sign)
    if sign == -1 and level == 2:
        # −I = (R T⁻¹)² with exponent sum zero.
        for name, exponent in (("R", 1), ("T", -1), ("R", 1), ("T", -1)):
            letters.append((name, exponent))
        sign = 1
    return GenWord(level=level, letters=tuple(letters), sign=sign)


def gamma0_index(N: int) -> int:
    """Index of Γ₀(N) in SL₂(Z): N·Π_{ℓ | N}(1 + 1/ℓ)."""
    index = Fraction(N)
    for prime in sympy.primefactors(N):
        index *= Fraction(prime + 1, prime)
    return int(index)


@lru_cache(maxsize=None)
def _units(N: int) -> tuple[int, ...]:
    if N == 1:
        return (0,)
    return tuple(u for u in range(1, N) if gcd(u, N) == 1)


def _p1_key(c: int, d: int, N: int) -> tuple[int, int]:
    """Canonical representative of (c : d) in P¹(Z/N)."""
    return min(((u * c) % N, (u * d) % N) for u in _units(N))


@lru_cache(maxsize=None)
def _coset_representatives(N: int) -> dict[tuple[int, int], Mat2]:
    reps = {_p1_key(0, 1, N): IDENTITY}
    queue = deque([IDENTITY])
    while queue:
        rep = queue.popleft()
        for gen in (S, T):
            g = mat_mul(rep, gen)
            key = _p1_key(int(g.c), int(g.d), N)
            if key not in reps:
                reps[key] = g
                queue.append(g)
    expected = gamma0_index(N)
    if len(reps) != expected:
        raise RuntimeError(
            f"Coset enumeration for Γ0({N}) found {len(reps)} cosets, "
            f"expected {expected}"
        )
    return reps


@lru_cache(maxsize=None)
def _schreier_generators(N: int) -> tuple[Mat2, ...]:
    reps = _coset_representatives(N)
    seen: set[tuple[Fraction, ...]] = set()
    gens: list[Mat2] = []
    for rep in reps.values():
        for gen in (S, T):
            g = mat_mul(rep, gen)
            target = reps[_p1_key(int(g.c), int(g.d), N)]
            h = mat_mul(g, mat_inv(target))
            if h == IDENTITY or h.entries() in seen:
                continue
            seen.add(h.entries())
            gens.append(h)
    return tuple(gens)


def gamma0_generators(N: int) -> list[Mat2]:
    """Generators of Γ₀(N) by coset enumeration and Schreier rewriting.

    Right cosets Γ₀(N)g are labelled by the bottom row of g in P¹(Z/N);
    a breadth-first search with S and T yields a transversal, and the
    Schreier elements rep·s·rep(rep·s)⁻¹ generate the subgroup.

    Args:
        N: Level ≥ 1.

    Returns:
        list[Mat2]: Generators, −I included whenever it arises.
    """
    if N < 1:
        raise ValueError(f"Level must be positive, got {N}")
    return list(_schreier_generators(N))


def _as_point(x) -> ProjectivePoint:
    if isinstance(x, ProjectivePoint):
        return x
    if isinstance(x, str) and x.strip() in ("∞", "inf", "oo", "infinity"):
        return INFINITY
    return ProjectivePoint.from_rational(Fraction(x))


def cusps_equivalent(x, y, N: int) -> bool:
    """Decide whether two points of P¹(Q) share a Γ₀(N)-orbit.

    a/c ~ a'/c' iff some y coprime to N has c' ≡ y·c (mod N) and
    a ≡ y·a' (mod gcd(c, N)).
    """
    p, q = _as_point(x), _as_point(y)
    if N == 1:
        return True
    g = gcd(p.c, N)
    if g != gcd(q.c, N):
        return False
    for u in _units(N):
        if (q.c - u * p.c) % N == 0 and (p.a - u * q.a) % g == 0:
            return True
    return False


@lru_cache(maxsize=None)
def cusp_representatives(N: int) -> tuple[ProjectivePoint, ...]:
    """Canonical cusp list: ∞, then a/d by increasing divisor d < N."""
    reps: list[ProjectivePoint] = [INFINITY]
    for d in sympy.divisors(N):
        if d == N:
            continue
        for a in range(d):
            if gcd(a, d) != 1:
                continue
            candidate = ProjectivePoint.from_pair(a, d)
            if not any(cusps_equivalent(candidate, r, N) for r in reps):
                reps.append(candidate)
    return tuple(reps)


def cusp_classify(x, N: int) -> CuspClass:
    """Return the canonical Γ₀(N)-cusp of x (a rational, point or "∞")."""
    point = _as_point(x)
    for rep in cusp_representatives(N):
        if cusps_equivalent(point, rep, N):
            return CuspClass(level=N, representative=rep)
    raise RuntimeError(f"No cusp representative found for {point} at level {N}")


def hecke_cosets(p: int) -> list[Mat2]:
    """β_j = (1 j; 0 p) for 0 ≤ j < p, followed by β_∞ = (p 0; 0 1)."""
    if not sympy.isprime(p):
        raise BadPrime(f"Hecke cosets need a prime, got {p}")
    return [Mat2.of(1, j, 0, p) for j in range(p)] + [Mat2.of(p, 0, 0, 1)]


def random_word(rng: random.Random, level: int, length: int) -> GenWord:
    """Random word of ``length`` letters with exponents in ±1..±3."""
    letters = []
    for i in range(length):
        name = "T" if i % 2 == 0 else "R"
        if rng.random() < 0.5:
            name = "R" if name == "T" else "T"
        exponent = rng.choice((-3, -2, -1, 1, 2, 3))
        letters.append((name, exponent))
    return GenWord(level=level, letters=tuple(letters), sign=rng.choice((1, -1)))


def random_gamma0(rng: random.Random, level: int, length: int = 6) -> Mat2:
    """Random element of Γ₀(level) as a product of generator powers."""
    return reconstruct(random_word(rng, level, length))


def random_from_generators(
    rng: random.Random,
    generators: list[Mat2],
    length: int = 4,
) -> Mat2:
    """Random product of ``length`` generators or their inverses."""
    out = IDENTITY
    for _ in range(length):
        g = rng.choice(generators)
        out = mat_mul(out, g if rng.random() < 0.5 else mat_inv(g))
    return out


__all__ = [
    "IDENTITY",
    "MINUS_IDENTITY",
    "S",
    "T",
    "generator_r",
    "generator_power",
    "mat_mul",
    "mat_inv",
    "mat_prod",
    "mat_act",
    "gamma0_member",
    "reconstruct",
    "decompose_word",
    "gamma0_index",
    "gamma0_generators",
    "cusps_equivalent",
    "cusp_representatives",
    "cusp_classify",
    "hecke_cosets",
    "random_word",
    "random_gamma0",
    "random_from_generators",
]

"""The coefficient sequences T_C(n) and T_L(n).

Two independent routes are provided for each family:

* an oracle counting classes of elements of Z[√6] (resp. Z[√2]) of the
  right norm modulo the unit group, and
* the multiplicative formula over signed primes, whose base values at
  primes p ≡ 1 (mod 24) (resp. mod 8) come from the oracle.
"""

from functools import lru_cache
from logging import Logger
from math import isqrt, prod

import sympy

from src.domain.constants import (
    MAX_COEFF_INDEX,
    PELL_UNIT_SQRT2,
    PELL_UNIT_SQRT6,
)
from src.domain.errors import BadResidue
from src.domain.models.coefficients import CoeffKind, CoeffTable, Provenance


def _is_positive(u: int, v: int, d: int) -> bool:
    """Sign of u + v√d decided exactly."""
    if u >= 0 and v >= 0:
        return (u, v) != (0, 0)
    if u <= 0 and v <= 0:
        return False
    norm = u * u - d * v * v
    return norm > 0 if u > 0 else norm < 0


def _is_lower(u: int, v: int, d: int) -> bool:
    """For ξ = u + v√d > 0: whether ξ ≥ √|N(ξ)|, i.e. ξ ≥ |ξ′|."""
    norm = u * u - d * v * v
    return v >= 0 if norm > 0 else u >= 0


def _unit_inverse(unit: tuple[int, int], d: int) -> tuple[int, int]:
    e1, e2 = unit
    norm = e1 * e1 - d * e2 * e2
    return (e1, -e2) if norm == 1 else (-e1, e2)


def _mul(x: tuple[int, int], y: tuple[int, int], d: int) -> tuple[int, int]:
    return (x[0] * y[0] + d * x[1] * y[1], x[0] * y[1] + x[1] * y[0])


def norm_class_representatives(
    norms: tuple[int, ...],
    d: int,
    unit: tuple[int, int],
    bound_factor: int,
) -> list[tuple[int, int]]:
    """One representative per unit class of elements with a given norm.

    Each class of u + v√d under ⟨−1, unit⟩ has exactly one member ξ > 0
    with √|N| ≤ ξ < unit·√|N|. The window forces |v| ≤ √(bound_factor·|N|)
    so the search over v is finite.

    Args:
        norms: Norm values to solve u² − d·v² = N for.
        d: Squarefree discriminant part (6 or 2).
        unit: Fundamental unit (u, v).
        bound_factor: K with the window contained in |v| ≤ √(K·|N|).

    Returns:
        list[tuple[int, int]]: Sorted representatives (u, v).
    """
    inverse = _unit_inverse(unit, d)
    found: set[tuple[int, int]] = set()
    for norm in norms:
        limit = isqrt(bound_factor * abs(norm)) + 2
        for v in range(-limit, limit + 1):
            square = norm + d * v * v
            if square < 0:
                continue
            root = isqrt(square)
            if root * root != square:
                continue
            for u in {root, -root}:
                if not _is_positive(u, v, d) or not _is_lower(u, v, d):
                    continue
                below = _mul((u, v), inverse, d)
                if not _is_lower(*below, d):
                    found.add((u, v))
    return sorted(found)


def _pell_character(u: int, v: int) -> int:
    residue = (u + 3 * v) % 12
    if residue in (1, 11):
        return 1
    if residue in (5, 7):
        return -1
    raise RuntimeError(f"u + 3v = {u + 3 * v} is not a unit mod 12")


def tc_oracle(m: int) -> int:
    """T_C(m) by counting classes of solutions of u² − 6v² = m.

    Args:
        m: Integer ≡ 1 (mod 24), possibly negative.

    Returns:
        int: (#classes with u + 3v ≡ ±1 mod 12) − (#classes with ≡ ±5).

    Raises:
        BadResidue: If m ≢ 1 (mod 24).
    """
    if m % 24 != 1:
        raise BadResidue(f"T_C needs m ≡ 1 mod 24, got {m}")
    reps = norm_class_representatives((m,), 6, PELL_UNIT_SQRT6, 5)
    return sum(_pell_character(u, v) for u, v in reps)


def chi_l(norm: int) -> int:
    """χ_L on an ideal of Z[√2] by its norm modulo 16."""
    residue = norm % 16
    if residue in (1, 15):
        return 1
    if residue in (7, 9):
        return -1
    return 0


def tl_oracle(n: int) -> int:
    """T_L(n) = χ_L(|n|) · #{ideals of Z[√2] of norm |n|}.

    Raises:
        BadResidue: If n ≢ 1 (mod 8).
    """
    if n % 8 != 1:
        raise BadResidue(f"T_L needs n ≡ 1 mod 8, got {n}")
    size = abs(n)
    reps = norm_class_representatives((size, -size), 2, PELL_UNIT_SQRT2, 2)
    return chi_l(size) * len(reps)


def signed_prime(q: int, modulus: int) -> int:
    """q if q ≡ 1, −q if q ≡ −1 (mod modulus)."""
    residue = q % modulus
    if residue == 1:
        return q
    if residue == modulus - 1:
        return -q
    raise ValueError(f"Prime {q} is not ±1 mod {modulus}")


def signed_factorization(n: int, modulus: int) -> list[tuple[int, int]]:
    """Factor n over signed primes ≡ 1 (mod modulus).

    Raises:
        RuntimeError: If the signed primes do not reconstruct n.
    """
    factors = [
        (signed_prime(int(q), modulus), int(e))
        for q, e in sorted(sympy.factorint(abs(n)).items())
    ]
    if prod(p**e for p, e in factors) != n:
        raise RuntimeError(f"Signed primes {factors} do not reconstruct {n}")
    return factors


def _check_range(n: int) -> None:
    if abs(n) > MAX_COEFF_INDEX:
        raise ValueError(f"|n| = {abs(n)} exceeds {MAX_COEFF_INDEX}")


@lru_cache(maxsize=None)
def _tc_base(p: int) -> int:
    return tc_oracle(p)


@lru_cache(maxsize=None)
def _tl_base(p: int) -> int:
    return tl_oracle(p)


def _split_prime_power(
    base: int,
    p: int,
    e: int,
    oracle,
    logger: Logger | None,
) -> int:
    if base == 2:
        return e + 1
    if base == -2:
        return (-1) ** e * (e + 1)
    if logger is not None:
        logger.warning(
            f"Base value T({p}) = {base}; using the oracle on {p}^{e}"
        )
    return oracle(p**e)


def tc_prime_power(p: int, e: int, logger: Logger | None = None) -> int:
    """T_C(p^e) for a signed prime p ≡ 1 (mod 6)."""
    if e == 0:
        return 1
    residue = p % 24
    if residue == 1:
        return _split_prime_power(
            _tc_base(p), p, e, tc_oracle, logger
        )
    if e % 2:
        return 0
    if residue in (13, 19):
        return 1
    if residue == 7:
        return (-1) ** (e // 2)
    raise ValueError(f"{p} is not a signed prime ≡ 1 mod 6")


def tl_prime_power(p: int, e: int, logger: Logger | None = None) -> int:
    """T_L(p^e) for a signed prime p ≡ 1 (mod 4)."""
    if e == 0:
        return 1
    residue = p % 8
    if residue == 1:
        return _split_prime_power(
            _tl_base(p), p, e, tl_oracle, logger
        )
    if residue == 5:
        return 0 if e % 2 else (-1) ** (e // 2)
    raise ValueError(f"{p} is not a signed prime ≡ 1 mod 4")


def tc_formula(n: int, logger: Logger | None = None) -> int:
    """T_C(n) by complete multiplicativity; 0 unless n ≡ 1 (mod 24)."""
    _check_range(n)
    if n % 24 != 1:
        return 0
    return prod(
        tc_prime_power(p, e, logger) for p, e in signed_factorization(n, 6)
    )


def tl_formula(n: int, logger: Logger | None = None) -> int:
    """T_L(n) by complete multiplicativity; 0 unless n ≡ 1 (mod 8)."""
    _check_range(n)
    if n % 8 != 1:
        return 0
    return prod(
        tl_prime_power(p, e, logger) for p, e in signed_factorization(n, 4)
    )


_SOURCES = {
    (CoeffKind.TC, Provenance.FORMULA): tc_formula,
    (CoeffKind.TC, Provenance.ORACLE): tc_oracle,
    (CoeffKind.TL, Provenance.FORMULA): tl_formula,
    (CoeffKind.TL, Provenance.ORACLE): tl_oracle,
}


def coefficient(kind: CoeffKind, n: int, provenance: Provenance) -> int:
    """T(n) from the requested source; 0 outside the residue class."""
    kind, provenance = CoeffKind(kind), Provenance(provenance)
    if n % kind.modulus != 1:
        return 0
    return _SOURCES[(kind, provenance)](n)


def residue_indices(modulus: int, max_index: int) -> list[int]:
    """All n ≡ 1 (mod modulus) with 1 ≤ |n| ≤ max_index, by increasing |n|."""
    out = []
    for size in range(1, max_index + 1):
        for n in (size, -size):
            if n % modulus == 1:
                out.append(n)
    return out


def build_coeff_table(
    kind: CoeffKind,
    max_index: int,
    provenance: Provenance = Provenance.FORMULA,
) -> CoeffTable:
    """Tabulate T(n) for |n| ≤ max_index.

    Args:
        kind: TC or TL.
        max_index: Largest |n|.
        provenance: Formula (default) or oracle.

    Returns:
        CoeffTable: Nonzero values only.
    """
    kind, provenance = CoeffKind(kind), Provenance(provenance)
    table = CoeffTable(kind=kind, max_index=max_index, provenance=provenance)
    for n in residue_indices(kind.modulus, max_index):
        value = _SOURCES[(kind, provenance)](n)
        if value:
            table.values[n] = value
    return table


__all__ = [
    "norm_class_representatives",
    "tc_oracle",
    "tl_oracle",
    "chi_l",
    "signed_prime",
    "signed_factorization",
    "tc_prime_power",
    "tl_prime_power",
    "tc_formula",
    "tl_formula",
    "coefficient",
    "residue_indices",
    "build_coeff_table",
]

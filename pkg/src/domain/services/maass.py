"""Numerical evaluation of the Maass wave forms u_C and u_L."""

from collections.abc import Callable
from logging import Logger

import mpmath
import sympy

from src.domain.constants import (
    DEFAULT_EPS,
    DEFAULT_PRECISION,
    DIVISOR_BOUND_C,
    DIVISOR_BOUND_EXP,
    MIN_IMAG_PART,
)
from src.domain.errors import BadPrime, ConvergenceError, NotInGroup
from src.domain.models.forms import HPoint, MaassForm, MaassKind, MaassSpec
from src.domain.models.modular import Mat2
from src.domain.services.bessel import bessel_k0
from src.domain.services.coefficients import (
    build_coeff_table,
    tc_formula,
    tl_formula,
)
from src.domain.services.exact_arith import cyc_embed
from src.domain.services.modular_group import gamma0_member, mat_act
from src.domain.services.multipliers import nu_eval

# Doubling search stops here; tables this large are never needed.
_MAX_TRUNCATION = 1 << 24


def _tail_bound(spec: MaassSpec, y: float, n: int) -> float:
    arg = 2 * mpmath.pi * n * y / spec.scale
    bessel = bessel_k0(arg, tol=1e-30, precision=15)
    return float(
        mpmath.sqrt(y) * DIVISOR_BOUND_C * n ** (1 + DIVISOR_BOUND_EXP) * bessel
    )


def truncation_index(spec: MaassSpec, y: float, eps: float = DEFAULT_EPS) -> int:
    """Smallest doubling N with √y·C·N^1.7·K₀(2πNy/scale) < eps.

    Raises:
        ConvergenceError: If no N up to 2^24 suffices.
    """
    if eps <= 0:
        raise ValueError(f"eps must be positive, got {eps}")
    n = 8
    while _tail_bound(spec, y, n) >= eps:
        n *= 2
        if n > _MAX_TRUNCATION:
            raise ConvergenceError(f"No truncation reaches {eps} at y = {y}")
    return n


def build_maass_form(
    kind: MaassKind | str,
    y_min: float = MIN_IMAG_PART,
    eps: float = DEFAULT_EPS,
) -> MaassForm:
    """Precompute the coefficient table needed for y ≥ y_min at accuracy eps."""
    spec = MaassSpec.for_kind(kind)
    size = truncation_index(spec, y_min, eps)
    table = build_coeff_table(spec.coeff_kind, size)
    return MaassForm(spec=spec, table=table, y_min=y_min, eps=eps)


def fourier_term(spec: MaassSpec, n: int, z, precision: int = DEFAULT_PRECISION):
    """√y·K₀(2π|n|y/s)·e^{2πinx/s} at z."""
    with mpmath.workdps(precision):
        z = mpmath.mpmathify(z)
        x, y = z.real, z.imag
        arg = 2 * mpmath.pi * abs(n) * y / spec.scale
        bessel = bessel_k0(arg, precision=precision)
        phase = mpmath.expjpi(2 * n * x / spec.scale)
        return mpmath.sqrt(y) * bessel * phase


def _check_height(y) -> None:
    if y < MIN_IMAG_PART:
        raise ConvergenceError(
            f"Im z = {mpmath.nstr(y, 6)} is below the floor {MIN_IMAG_PART}"
        )


def eval_maass(
    form: MaassForm,
    z,
    eps: float = DEFAULT_EPS,
    precision: int = DEFAULT_PRECISION,
):
    """√y Σ_{|n| ≤ N} T(n) K₀(2π|n|y/s) e^{2πinx/s}, tail below eps.

    Args:
        form: Spec and coefficient table.
        z: HPoint or complex number in the upper half plane.
        eps: Target absolute accuracy.
        precision: Working precision in decimal digits.

    Returns:
        mpmath.mpc: The value.

    Raises:
        ConvergenceError: If Im z is below the floor or the table is too
            short for the required truncation.
    """
    if isinstance(z, HPoint):
        z = z.as_mpc()
    with mpmath.workdps(precision):
        z = mpmath.mpmathify(z)
        x, y = z.real, z.imag
        _check_height(y)
        size = truncation_index(form.spec, float(y), eps)
        if size > form.table.max_index:
            raise ConvergenceError(
                f"Truncation {size} exceeds the table range "
                f"{form.table.max_index} at y = {mpmath.nstr(y, 6)}"
            )
        scale = form.spec.scale
        total = mpmath.mpc(0)
        for n, coef in form.table.nonzero():
            if abs(n) > size:
                break
            arg = 2 * mpmath.pi * abs(n) * y / scale
            bessel = bessel_k0(arg, precision=precision)
            total += coef * bessel * mpmath.expjpi(2 * n * x / scale)
        return mpmath.sqrt(y) * total


def is_reflected(spec: MaassSpec, p: int) -> bool:
    """T_p uses z ↦ −z̄ when p ≡ −1 (mod 6) at level 2, (mod 4) at level 4."""
    modulus = 6 if spec.level == 2 else 4
    return p % modulus == modulus - 1


def hecke_points(spec: MaassSpec, p: int, z) -> list:
    """The p + 1 arguments of T_p: ±p·w and (w + j)/p with w = z or −z̄."""
    z = mpmath.mpmathify(z)
    w = -mpmath.conj(z) if is_reflected(spec, p) else z
    return [p * w] + [(w + j) / p for j in range(p)]


def hecke_maass(
    form: MaassForm,
    p: int,
    z,
    eps: float = DEFAULT_EPS,
    precision: int = DEFAULT_PRECISION,
    logger: Logger | None = None,
):
    """T_p u(z) = p^{−1/2}(ε_p u(p·w) + Σ_j ζ_s^{−pj} u((w + j)/p)).

    w = −z̄ on the reflected branch, else z; ε_p = (−1)^{(p²−1)/24} at
    level 2 and 1 at level 4. Each of the p + 1 terms is evaluated to
    eps/(p + 2).

    Raises:
        BadPrime: If p is not a prime coprime to the level.
        ConvergenceError: If a shifted point drops below the height floor.
    """
    spec = form.spec
    if not sympy.isprime(p) or spec.level % p == 0 or p < 3:
        raise BadPrime(
            f"T_p on level {spec.level} needs an odd prime, got {p}"
        )
    if isinstance(z, HPoint):
        z = z.as_mpc()
    term_eps = eps / (p + 2)
    prefactor = 1
    if spec.level == 2 and ((p * p - 1) // 24) % 2:
        prefactor = -1
    with mpmath.workdps(precision):
        points = hecke_points(spec, p, z)
        total = prefactor * eval_maass(form, points[0], term_eps, precision)
        for j, point in enumerate(points[1:]):
            turn = mpmath.mpf(p * j % spec.scale) / spec.scale
            twist = mpmath.expjpi(-2 * turn)
            total += twist * eval_maass(form, point, term_eps, precision)
        if logger is not None:
            logger.debug(f"T_{p} u at {z}: {mpmath.nstr(total, 12)}")
        return total / mpmath.sqrt(p)


def maass_eigenvalue(spec: MaassSpec, p: int) -> int:
    """T(±p), the eigenvalue of T_p with the sign of its branch."""
    sign = -1 if is_reflected(spec, p) else 1
    coefficient = tc_formula if spec.level == 2 else tl_formula
    return coefficient(sign * p)


def modularity_residual(
    form: MaassForm,
    gamma: Mat2,
    z,
    eps: float = DEFAULT_EPS,
    precision: int = DEFAULT_PRECISION,
) -> float:
    """|u(γz) − ν(γ)u(z)|.

    Raises:
        NotInGroup: If γ ∉ Γ₀(level).
        ConvergenceError: If z or γz is below the height floor.
    """
    spec = form.spec
    if not gamma0_member(gamma, spec.level):
        raise NotInGroup(f"{gamma} is not in Γ0({spec.level})")
    if isinstance(z, HPoint):
        z = z.as_mpc()
    with mpmath.workdps(precision):
        z = mpmath.mpmathify(z)
        image = mat_act(gamma, z)
        nu = cyc_embed(nu_eval(spec.multiplier, gamma), precision)
        left = eval_maass(form, image, eps, precision)
        right = nu * eval_maass(form, z, eps, precision)
        return float(abs(left - right))


def hyperbolic_laplacian(
    fn: Callable,
    z,
    h: float = 1e-3,
    precision: int = DEFAULT_PRECISION,
):
    """Δf(z) = −y²(f_xx + f_yy) by second-order central differences."""
    with mpmath.workdps(precision):
        z = mpmath.mpmathify(z)
        step = mpmath.mpf(h)
        centre = fn(z)
        neighbours = (
            fn(z + step)
            + fn(z - step)
            + fn(z + 1j * step)
            + fn(z - 1j * step)
        )
        return -(z.imag**2) * (neighbours - 4 * centre) / step**2


__all__ = [
    "truncation_index",
    "build_maass_form",
    "fourier_term",
    "eval_maass",
    "is_reflected",
    "hecke_points",
    "hecke_maass",
    "maass_eigenvalue",
    "modularity_residual",
    "hyperbolic_laplacian",
]

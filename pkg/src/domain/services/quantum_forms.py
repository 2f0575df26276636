"""Exact evaluation of f_C and f_L at rationals and their Hecke images.

At x = a/c the series variable q = e^{2πix} is the root of unity ζ_c^a.
Each q-series terminates there, so values are finite sums computed in the
group ring Q[X]/(X^M − 1) and reduced modulo Φ_M once at the end.
"""

from collections.abc import Callable
from fractions import Fraction
from logging import Logger
from math import gcd

import sympy

from src.domain.errors import (
    BadPrime,
    DomainError,
    NonIntegerResult,
    PoleError,
)
from src.domain.models.cyclotomic import CycNumber, CyclicSum
from src.domain.models.forms import QPoint, QuantumForm, QValue
from src.domain.models.modular import Mat2
from src.domain.models.multipliers import MultiplierSystem
from src.domain.services.coefficients import tc_formula, tl_formula
from src.domain.services.exact_arith import cyc_sum
from src.domain.services.modular_group import cusp_classify, mat_act
from src.domain.services.multipliers import nu_exponent, nu_power


def _reduced_root(order: int, k: int) -> tuple[int, int]:
    """(M′, k′) with ζ_order^k = ζ_M′^k′ and gcd(k′, M′) = 1."""
    g = gcd(k % order, order) if k % order else order
    return order // g, (k % order) // g


def sigma_minus_one_at_root(order: int, k: int) -> CyclicSum:
    """σ(q) − 1 = Σ_{n≥0} (−1)^n q^{n+1}(q)_n at q = ζ_order^k.

    The sum stops at n = M′ − 1 where M′ is the exact order of q, since
    (1 − q^{M′}) = 0 kills every later term.
    """
    m, e = _reduced_root(order, k)
    acc = CyclicSum(m)
    poch = CyclicSum.monomial(m, 0, 1)
    for n in range(m):
        if n:
            poch.mul_binomial(-1, e * n)
        acc.add_scaled(poch, -1 if n % 2 else 1, e * (n + 1))
    return acc


def w1_at_root(order: int, k: int) -> CyclicSum:
    """W₁(q) at q = ζ_order^k of odd exact order, without field division.

    With N = (M′ − 1)/2, the alternate form terminates after n = N. The
    running numerator V_n = V_{n−1}(1 + q^{2n}) + (q; q²)_n(−q)^n clears the
    denominators, and Π_{k≤N}(1 + q^{2k}) is inverted by Π_{k≤N}(1 + q^{−2k}).
    """
    m, e = _reduced_root(order, k)
    if m % 2 == 0:
        raise DomainError(f"W1 terminates only at odd-order roots, got {m}")
    top = (m - 1) // 2
    value = CyclicSum.monomial(m, 0, 1)
    poch = CyclicSum.monomial(m, 0, 1)
    for n in range(1, top + 1):
        poch.mul_binomial(-1, e * (2 * n - 1))
        value.mul_binomial(1, e * 2 * n)
        value.add_scaled(poch, -1 if n % 2 else 1, e * n)
    for n in range(1, top + 1):
        value.mul_binomial(1, -e * 2 * n)
    return value


def w2_inverse_at_root(order: int, k: int) -> CyclicSum:
    """W₂(q⁻¹) at q = ζ_order^k with 4 | exact order.

    With w = q⁻¹ and N = M′/4, the factor (1 + w^{2N}) = 0 ends the sum
    after n = N. Denominators are cleared by
    V_n = V_{n−1}(1 − w^{2n−1}) + (−1; w²)_n(−w)^n and the full denominator
    is inverted through Π_{k<N}(1 − w^{2k+1})·Π_{k<N}(1 + w^{2k+1}) = 2.
    """
    m, e = _reduced_root(order, k)
    if m % 4:
        raise DomainError(f"W2(1/q) terminates only when 4 | {m}")
    w = -e
    top = m // 4
    value = CyclicSum(m)
    poch = CyclicSum.monomial(m, 0, 1)
    for n in range(1, top + 1):
        if n == 1:
            poch.mul_monomial(0, 2)
        else:
            poch.mul_binomial(1, w * (2 * n - 2))
        value.mul_binomial(-1, w * (2 * n - 1))
        value.add_scaled(poch, -1 if n % 2 else 1, w * n)
    for n in range(top):
        value.mul_binomial(1, w * (2 * n + 1))
    value.mul_monomial(0, Fraction(1, 2))
    return value


def _with_root_prefactor(value: CyclicSum, root: int, a: int) -> CyclicSum:
    """Multiply a sum of order c by ζ_{root·c}^a."""
    out = value.embed(value.order * root)
    return out.mul_monomial(a)


def _fc_sum(point: QPoint) -> CyclicSum:
    a, c = point.numerator, point.denominator
    sigma = sigma_minus_one_at_root(c, a)
    sigma.coeffs[0] += 1
    return _with_root_prefactor(sigma, 24, a)


def _fl_sum(point: QPoint) -> CyclicSum:
    a, c = point.numerator, point.denominator
    if c % 2:
        inner = w1_at_root(c, a)
    elif c % 4 == 0:
        inner = w2_inverse_at_root(c, a)
    else:
        raise DomainError(f"{point} lies in the orbit of the cusp 1/2")
    return _with_root_prefactor(inner, 8, a)


def _fc_dual_sum(point: QPoint) -> CyclicSum:
    a, c = point.numerator, point.denominator
    w = -a
    stop = c // gcd(2, c)
    acc = CyclicSum(c)
    poch = CyclicSum.monomial(c, 0, 1)
    for n in range(stop):
        if n:
            poch.mul_binomial(-1, w * 2 * n)
        acc.add_scaled(poch, 2, w * (n + 1))
    return _with_root_prefactor(acc, 24, a)


_EVALUATORS: dict[QuantumForm, Callable[[QPoint], CyclicSum]] = {
    QuantumForm.FC: _fc_sum,
    QuantumForm.FL: _fl_sum,
}


def _form(form: QuantumForm | str) -> QuantumForm:
    return form if isinstance(form, QuantumForm) else QuantumForm(form.lower())


def eval_fc(x) -> QValue:
    """f_C(x) = q^{1/24}σ(q) at x = a/c, exact in Q(ζ_{24c}).

    Examples:
        >>> str(eval_fc(0).exact)
        '2'
    """
    return QValue(_fc_sum(QPoint.of(x)).reduce())


def eval_fc_dual(x) -> QValue:
    """f_C(x) = −q^{1/24}σ*(q⁻¹) through −σ*(w) = 2Σ w^{n+1}(w²; w²)_n."""
    return QValue(_fc_dual_sum(QPoint.of(x)).reduce())


def eval_fl(x) -> QValue:
    """f_L(x) on S₀ ∪ S_∞, exact in Q(ζ_{8c}).

    Raises:
        DomainError: For x in the Γ₀(4)-orbit of 1/2.
    """
    point = QPoint.of(x)
    cusp = cusp_classify(point.x, 4)
    point = QPoint(point.x, cusp)
    return QValue(_fl_sum(point).reduce())


def eval_form(form: QuantumForm | str, x) -> QValue:
    form = _form(form)
    return eval_fc(x) if form is QuantumForm.FC else eval_fl(x)


def is_reflected(form: QuantumForm | str, p: int) -> bool:
    """Whether T_p^∞ uses x ↦ −x: p ≡ −1 (mod 6) for f_C, (mod 4) for f_L."""
    modulus = 6 if _form(form) is QuantumForm.FC else 4
    return p % modulus == modulus - 1


def _check_hecke_prime(form: QuantumForm, p: int) -> None:
    smallest = 5 if form is QuantumForm.FC else 3
    if not sympy.isprime(p) or p < smallest:
        raise BadPrime(
            f"T_p on {form.value} needs a prime p ≥ {smallest}, got {p}"
        )


def hecke_terms(form: QuantumForm | str, p: int, x) -> list[tuple]:
    """The p + 1 weighted terms of T_p^∞ f(x) as cyc_sum input."""
    form = _form(form)
    _check_hecke_prime(form, p)
    point = QPoint.of(x)
    sign = -1 if is_reflected(form, p) else 1
    prefactor = 1
    if form is QuantumForm.FC:
        prefactor = -1 if ((p * p - 1) // 24) % 2 else 1
    evaluate = _EVALUATORS[form]
    arguments = [sign * p * point.x] + [
        (sign * point.x + j) / p for j in range(p)
    ]
    if form is QuantumForm.FL:
        for arg in arguments:
            if arg.denominator % 4 == 2:
                raise DomainError(
                    f"T_{p} moved {point} to the cusp 1/2 at {arg}"
                )
    terms = [(prefactor, None, evaluate(QPoint(arguments[0])))]
    r = form.root_order
    for j, arg in enumerate(arguments[1:]):
        terms.append((Fraction(1, p), (r, -p * j), evaluate(QPoint(arg))))
    return terms


def hecke_qmf(form: QuantumForm | str, p: int, x) -> QValue:
    """T_p^∞ f(x), exact.

    For f_C: (−1)^{(p²−1)/24} f(±px) + (1/p)Σ_j ζ_24^{−pj} f((±x + j)/p);
    for f_L the same with ζ_8 and no sign prefactor. The minus branch is
    taken when p ≡ −1 (mod 6) for f_C and p ≡ 3 (mod 4) for f_L.

    Raises:
        BadPrime: If p is not an admissible prime.
        DomainError: If an f_L argument leaves S₀ ∪ S_∞.
    """
    return QValue(cyc_sum(hecke_terms(form, p, x)))


def hecke_eigenvalue(form: QuantumForm | str, p: int) -> int:
    """±T(±p), the eigenvalue of T_p^∞ on the form."""
    form = _form(form)
    sign = -1 if is_reflected(form, p) else 1
    coefficient = tc_formula if form is QuantumForm.FC else tl_formula
    return sign * coefficient(sign * p)


def cocycle(
    form: QuantumForm | str,
    gamma: Mat2,
    x,
    hecke_p: int | None = None,
) -> QValue:
    """h_γ(x) = F(x) − ν(γ)⁻¹·|cx + d|⁻¹·F(γx).

    F is the form itself, or T_p^∞ of it when ``hecke_p`` is given; in that
    case the multiplier is ν^{±p} with the sign of the Hecke branch.

    Raises:
        PoleError: At x = −d/c.
        NotInGroup: If γ ∉ Γ₀(level).
        DomainError: If x or γx leaves the domain of f_L.
    """
    form = _form(form)
    point = QPoint.of(x)
    denominator = gamma.c * point.x + gamma.d
    if denominator == 0:
        raise PoleError(f"{gamma} has a pole at x = {point}")
    image = mat_act(gamma, point.x)
    nu = MultiplierSystem.base(form.level)
    if hecke_p is None:

        def evaluate(arg: Fraction) -> CycNumber | CyclicSum:
            return _EVALUATORS[form](QPoint(arg))

    else:
        sign = -1 if is_reflected(form, hecke_p) else 1
        nu = nu_power(nu, sign * hecke_p)

        def evaluate(arg: Fraction) -> CycNumber | CyclicSum:
            return hecke_qmf(form, hecke_p, arg).exact

    exponent = nu_exponent(nu, gamma)
    weight = -Fraction(1) / abs(denominator)
    return QValue(
        cyc_sum(
            [
                (1, None, evaluate(point.x)),
                (weight, (nu.root_order, -exponent), evaluate(image)),
            ]
        )
    )


def _require_integer(value: CycNumber, what: str) -> int:
    rational = value.rational_value()
    if rational is None or rational.denominator != 1:
        raise NonIntegerResult(f"{what} evaluated to {value}, not an integer")
    return int(rational)


def identity_tc(p: int, logger: Logger | None = None) -> int:
    """(−1)^k + (1/2p)Σ_{j<p} ζ_p^{−kj}(σ(ζ_p^j) − 1) with k = (p²−1)/24.

    Equals ±T_C(±p) for p ≡ ±1 (mod 6).

    Raises:
        BadPrime: Unless p ≥ 5 is prime.
        NonIntegerResult: If the sum is not a rational integer.
    """
    if not sympy.isprime(p) or p < 5:
        raise BadPrime(f"identity_tc needs a prime p ≥ 5, got {p}")
    k = (p * p - 1) // 24
    acc = CyclicSum(p)
    for j in range(p):
        acc.add_scaled(sigma_minus_one_at_root(p, j).embed(p), 1, -k * j)
    value = acc.reduce().scale(Fraction(1, 2 * p)) + (-1) ** k
    if logger is not None:
        logger.debug(f"identity_tc({p}) = {value}")
    return _require_integer(value, f"identity_tc({p})")


def identity_tl(p: int, logger: Logger | None = None) -> int:
    """1 + (1/p)Σ_{j<p} ζ_p^{−kj} W₁(ζ_p^j) with k = (p²−1)/8.

    The j = 0 summand is W₁(1) = 1. Equals ±T_L(±p) for p ≡ ±1 (mod 4).

    Raises:
        BadPrime: Unless p ≥ 3 is prime.
        NonIntegerResult: If the sum is not a rational integer.
    """
    if not sympy.isprime(p) or p < 3:
        raise BadPrime(f"identity_tl needs an odd prime, got {p}")
    k = (p * p - 1) // 8
    acc = CyclicSum(p)
    for j in range(p):
        acc.add_scaled(w1_at_root(p, j).embed(p), 1, -k * j)
    value = acc.reduce().scale(Fraction(1, p)) + 1
    if logger is not None:
        logger.debug(f"identity_tl({p}) = {value}")
    return _require_integer(value, f"identity_tl({p})")


__all__ = [
    "sigma_minus_one_at_root",
    "w1_at_root",
    "w2_inverse_at_root",
    "eval_fc",
    "eval_fc_dual",
    "eval_fl",
    "eval_form",
    "is_reflected",
    "hecke_terms",
    "hecke_qmf",
    "hecke_eigenvalue",
    "cocycle",
    "identity_tc",
    "identity_tl",
]

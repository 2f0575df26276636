"""Domain constants for the Cohen and Li-Ngo-Rhoades families."""

# Level -> order of the root of unity carrying the multiplier system.
ROOT_ORDER_BY_LEVEL = {2: 24, 4: 8}

# Levels with a word decomposition in T and R = (1 0; level 1).
SUPPORTED_LEVELS = (2, 4)

# Fundamental units (u, v) of Z[sqrt(D)] used by the ideal-count oracles.
PELL_UNIT_SQRT6 = (5, 2)
PELL_UNIT_SQRT2 = (1, 1)

DEFAULT_PRECISION = 30
MIN_PRECISION = 15
DEFAULT_SERIES_ORDER = 2000
DEFAULT_EPS = 1e-12

# Lowest imaginary part the Maass expansions are evaluated at.
MIN_IMAG_PART = 0.05

# |T(n)| <= d(|n|) <= DIVISOR_BOUND_C * |n| ** DIVISOR_BOUND_EXP.
DIVISOR_BOUND_C = 2
DIVISOR_BOUND_EXP = 0.7

# Crossover between the K0 power series and the exponential quadrature.
BESSEL_SERIES_CUTOFF = 2.0

# Largest |n| the coefficient formulas are used for.
MAX_COEFF_INDEX = 10**9


__all__ = [
    "ROOT_ORDER_BY_LEVEL",
    "SUPPORTED_LEVELS",
    "PELL_UNIT_SQRT6",
    "PELL_UNIT_SQRT2",
    "DEFAULT_PRECISION",
    "MIN_PRECISION",
    "DEFAULT_SERIES_ORDER",
    "DEFAULT_EPS",
    "MIN_IMAG_PART",
    "DIVISOR_BOUND_C",
    "DIVISOR_BOUND_EXP",
    "BESSEL_SERIES_CUTOFF",
    "MAX_COEFF_INDEX",
]

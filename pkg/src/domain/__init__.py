"""Domain package: exact arithmetic, modular groups and the forms built on them."""

from .errors import (
    BadPrime,
    BadResidue,
    ConvergenceError,
    DomainError,
    HeckeLabError,
    NonIntegerResult,
    NotInDoubleCoset,
    NotInGroup,
    PoleError,
)

__all__ = [
    "HeckeLabError",
    "NotInGroup",
    "NotInDoubleCoset",
    "BadResidue",
    "BadPrime",
    "DomainError",
    "PoleError",
    "NonIntegerResult",
    "ConvergenceError",
]

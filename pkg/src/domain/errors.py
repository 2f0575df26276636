"""Exception hierarchy for the hecke-lab domain."""


class HeckeLabError(Exception):
    """Base class for every error raised by the domain layer."""


class NotInGroup(HeckeLabError, ValueError):
    """Raised when a matrix is not an element of the requested Γ₀(N)."""


class NotInDoubleCoset(HeckeLabError, ValueError):
    """Raised when a matrix is outside the double coset Γ₀(N) α_p Γ₀(N)."""


class BadResidue(HeckeLabError, ValueError):
    """Raised when an index lies outside the residue class an oracle needs."""


class BadPrime(HeckeLabError, ValueError):
    """Raised when a Hecke prime is not prime or divides the level."""


class DomainError(HeckeLabError, ValueError):
    """Raised when a rational point lies outside a form's domain."""


class PoleError(HeckeLabError, ValueError):
    """Raised when a cocycle is requested at x = -d/c."""


class NonIntegerResult(HeckeLabError, RuntimeError):
    """Raised when an identity that must be integral is not."""


class ConvergenceError(HeckeLabError, RuntimeError):
    """Raised when a Fourier expansion needs more terms than available."""


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

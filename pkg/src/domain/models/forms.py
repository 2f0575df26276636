"""Value types for quantum modular forms and Maass wave forms."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

import mpmath

from src.domain.constants import DEFAULT_PRECISION, MIN_IMAG_PART
from src.domain.models.coefficients import CoeffKind, CoeffTable
from src.domain.models.cyclotomic import CycNumber
from src.domain.models.modular import CuspClass
from src.domain.models.multipliers import MultiplierSystem
from src.domain.services.exact_arith import cyc_embed


class QuantumForm(str, Enum):
    """f_C on Q (level 2) and f_L on S₀ ∪ S_∞ (level 4)."""

    FC = "fc"
    FL = "fl"

    @property
    def level(self) -> int:
        return 2 if self is QuantumForm.FC else 4

    @property
    def root_order(self) -> int:
        return 24 if self is QuantumForm.FC else 8

    @property
    def coeff_kind(self) -> CoeffKind:
        return CoeffKind.TC if self is QuantumForm.FC else CoeffKind.TL


@dataclass(frozen=True)
class QPoint:
    """A rational point x = a/c in lowest terms, with its cusp when known."""

    x: Fraction
    cusp: CuspClass | None = None

    @classmethod
    def of(cls, x: QPoint | Fraction | int | str) -> QPoint:
        if isinstance(x, QPoint):
            return x
        return cls(Fraction(x))

    @property
    def numerator(self) -> int:
        return self.x.numerator

    @property
    def denominator(self) -> int:
        return self.x.denominator

    def __str__(self) -> str:
        return str(self.x)


@dataclass(frozen=True)
class QValue:
    """Exact value of a quantum form; the embedding is computed on demand."""

    exact: CycNumber

    def approx(self, precision: int = DEFAULT_PRECISION) -> mpmath.mpc:
        return cyc_embed(self.exact, precision)

    def __eq__(self, other) -> bool:
        if isinstance(other, QValue):
            return self.exact == other.exact
        return self.exact == other


@dataclass(frozen=True)
class HPoint:
    """z = x + iy in the upper half plane."""

    x: float
    y: float

    def __post_init__(self) -> None:
        if not self.y > 0:
            raise ValueError(f"Imaginary part must be positive, got {self.y}")

    @classmethod
    def from_complex(cls, z) -> HPoint:
        z = mpmath.mpmathify(z)
        return cls(z.real, z.imag)

    def as_mpc(self) -> mpmath.mpc:
        return mpmath.mpc(self.x, self.y)

    def __str__(self) -> str:
        return f"{self.x}+{self.y}i"


class MaassKind(str, Enum):
    UC = "uc"
    UL = "ul"


@dataclass(frozen=True)
class MaassSpec:
    """√y Σ T(n) K₀(2π|n|y/scale) e^{2πinx/scale} on Γ₀(level).

    Attributes:
        level: 2 for u_C, 4 for u_L.
        scale: 24 for u_C, 8 for u_L.
        coeff_kind: Source family of T(n).
        multiplier: The multiplier system of the form.
    """

    level: int
    scale: int
    coeff_kind: CoeffKind
    multiplier: MultiplierSystem

    def __post_init__(self) -> None:
        if (self.level, self.scale) not in ((2, 24), (4, 8)):
            raise ValueError(
                f"Scale {self.scale} does not belong to level {self.level}"
            )

    @classmethod
    def for_kind(cls, kind: MaassKind | str) -> MaassSpec:
        kind = kind if isinstance(kind, MaassKind) else MaassKind(kind.lower())
        if kind is MaassKind.UC:
            return cls(2, 24, CoeffKind.TC, MultiplierSystem.base(2))
        return cls(4, 8, CoeffKind.TL, MultiplierSystem.base(4))


@dataclass(frozen=True)
class MaassForm:
    """A spec bundled with a coefficient table sized for y ≥ y_min."""

    spec: MaassSpec
    table: CoeffTable
    y_min: float = MIN_IMAG_PART
    eps: float = 1e-12


__all__ = [
    "QuantumForm",
    "QPoint",
    "QValue",
    "HPoint",
    "MaassKind",
    "MaassSpec",
    "MaassForm",
]

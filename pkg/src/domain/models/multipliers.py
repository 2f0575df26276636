"""Multiplier systems on Γ₀(2) and Γ₀(4)."""

from __future__ import annotations

from dataclasses import dataclass, field

from src.domain.constants import ROOT_ORDER_BY_LEVEL
from src.domain.models.modular import Mat2


@dataclass(frozen=True)
class MultiplierSystem:
    """ν^power where ν(T) = ν(R) = ζ_root_order is the base system.

    Attributes:
        level: 2 (root order 24) or 4 (root order 8).
        root_order: Order of the roots of unity taken as values.
        power: Exponent, reduced modulo root_order.
    """

    level: int
    root_order: int
    power: int = 1

    def __post_init__(self) -> None:
        expected = ROOT_ORDER_BY_LEVEL.get(self.level)
        if expected is None:
            raise ValueError(f"No multiplier system at level {self.level}")
        if self.root_order != expected:
            raise ValueError(
                f"Level {self.level} needs root order {expected}, "
                f"got {self.root_order}"
            )
        object.__setattr__(self, "power", self.power % self.root_order)

    @classmethod
    def base(cls, level: int) -> MultiplierSystem:
        """ν_C at level 2, ν_L at level 4."""
        return cls(level=level, root_order=ROOT_ORDER_BY_LEVEL.get(level, 0))

    def __pow__(self, exponent: int) -> MultiplierSystem:
        return MultiplierSystem(
            level=self.level,
            root_order=self.root_order,
            power=self.power * exponent,
        )


@dataclass(frozen=True)
class CompatReport:
    """Outcome of the compatibility check of ν and ν^p at α_p."""

    level: int
    p: int
    compatible: bool
    generators_checked: int
    random_checked: int
    witnesses: tuple[Mat2, ...] = field(default_factory=tuple)


__all__ = ["MultiplierSystem", "CompatReport"]

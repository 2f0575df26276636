"""Coefficient tables of T_C and T_L."""

from __future__ import annotations

from collections.abc import Iterator
from dataclasses import dataclass, field
from enum import Enum


class CoeffKind(str, Enum):
    """The two coefficient families, with their residue modulus."""

    TC = "tc"
    TL = "tl"

    @property
    def modulus(self) -> int:
        return 24 if self is CoeffKind.TC else 8


class Provenance(str, Enum):
    FORMULA = "formula"
    ORACLE = "oracle"


@dataclass
class CoeffTable:
    """Signed index n ↦ T(n) for 1 ≤ |n| ≤ max_index.

    Only indices n ≡ 1 modulo the family's modulus are stored; lookups
    outside that class return 0.

    Attributes:
        kind: TC or TL.
        max_index: Largest |n| in the table.
        provenance: How the values were produced.
        values: Nonzero entries keyed by signed n.
    """

    kind: CoeffKind
    max_index: int
    provenance: Provenance = Provenance.FORMULA
    values: dict[int, int] = field(default_factory=dict)

    def __getitem__(self, n: int) -> int:
        if abs(n) > self.max_index:
            raise KeyError(f"|{n}| exceeds table range {self.max_index}")
        return self.values.get(n, 0)

    def __contains__(self, n: int) -> bool:
        return abs(n) <= self.max_index

    def nonzero(self) -> Iterator[tuple[int, int]]:
        """Yield (n, T(n)) with T(n) ≠ 0 in order of increasing |n|."""
        for n in sorted(self.values, key=lambda k: (abs(k), k)):
            yield n, self.values[n]


__all__ = ["CoeffKind", "Provenance", "CoeffTable"]

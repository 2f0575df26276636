"""Domain models package.

``forms`` is imported from its module directly; it depends on the
embedding service.
"""

from .coefficients import CoeffKind, CoeffTable, Provenance
from .cyclotomic import CycNumber, CyclicSum
from .modular import INFINITY, CuspClass, GenWord, Mat2, ProjectivePoint
from .multipliers import CompatReport, MultiplierSystem
from .series import TruncSeries

__all__ = [
    "CoeffKind",
    "CoeffTable",
    "Provenance",
    "CycNumber",
    "CyclicSum",
    "INFINITY",
    "CuspClass",
    "GenWord",
    "Mat2",
    "ProjectivePoint",
    "CompatReport",
    "MultiplierSystem",
    "TruncSeries",
]

"""Application use cases package."""

from .check_maass_form import CheckMaassFormUseCase
from .evaluate_quantum_form import (
    ApplyHeckeOperatorUseCase,
    EvaluateQuantumFormUseCase,
)
from .expand_series import ExpandSeriesUseCase
from .lookup_coefficient import LookupCoefficientUseCase
from .run_selftest import RunSelftestUseCase
from .sweep_compatibility import SweepCompatibilityUseCase
from .tabulate_cocycle import TabulateCocycleUseCase
from .verify_identity import VerifyIdentityUseCase

__all__ = [
    "CheckMaassFormUseCase",
    "ApplyHeckeOperatorUseCase",
    "EvaluateQuantumFormUseCase",
    "ExpandSeriesUseCase",
    "LookupCoefficientUseCase",
    "RunSelftestUseCase",
    "SweepCompatibilityUseCase",
    "TabulateCocycleUseCase",
    "VerifyIdentityUseCase",
]

"""Use cases evaluating f_C and f_L and their Hecke images at rationals."""

from fractions import Fraction

from src.application.ports.records import CommandResult
from src.domain.models.forms import QuantumForm
from src.domain.services.modular_group import cusp_classify
from src.domain.services.quantum_forms import (
    eval_form,
    hecke_eigenvalue,
    hecke_qmf,
)
from src.infrastructure.logging.logger import get_app_logger
from src.utils.rational_utils import complex_parts, rational_text


class EvaluateQuantumFormUseCase:
    """Exact value of a quantum modular form, with its complex embedding."""

    def __init__(self, precision: int = 30, logger=None) -> None:
        self._precision = precision
        self._logger = logger or get_app_logger()

    def execute(self, form: str, x: Fraction) -> CommandResult:
        form = QuantumForm(form.lower())
        value = eval_form(form, x)
        re, im = complex_parts(value.approx(self._precision))
        record = {
            "record": "qeval",
            "form": form.value,
            "x": rational_text(x),
            "cusp": str(cusp_classify(x, form.level)),
            "exact": str(value.exact),
            "re": re,
            "im": im,
        }
        return CommandResult(records=(record,))


class ApplyHeckeOperatorUseCase:
    """Compare T_p^∞ f(x) with λ_p·f(x) exactly.

    λ_p is ±T(±p) with the sign of the Hecke branch, 0 off the ±1 class.
    """

    def __init__(self, precision: int = 30, logger=None) -> None:
        self._precision = precision
        self._logger = logger or get_app_logger()

    def execute(self, form: str, p: int, x: Fraction) -> CommandResult:
        form = QuantumForm(form.lower())
        image = hecke_qmf(form, p, x)
        eigenvalue = hecke_eigenvalue(form, p)
        expected = eval_form(form, x).exact * eigenvalue
        match = image.exact == expected
        re, im = complex_parts(image.approx(self._precision))
        if not match:
            self._logger.warning(
                f"T_{p} {form.value}({x}) = {image.exact}, "
                f"expected {eigenvalue}·{form.value}({x})"
            )
        record = {
            "record": "hecke",
            "form": form.value,
            "p": p,
            "x": rational_text(x),
            "exact": str(image.exact),
            "re": re,
            "im": im,
            "eigenvalue": eigenvalue,
            "match": match,
        }
        return CommandResult(records=(record,), passed=match)


__all__ = ["EvaluateQuantumFormUseCase", "ApplyHeckeOperatorUseCase"]

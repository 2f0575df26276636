"""Use case returning a single coefficient T_C(n) or T_L(n)."""

from src.application.ports.records import CommandResult
from src.domain.constants import MAX_COEFF_INDEX
from src.domain.models.coefficients import CoeffKind, Provenance
from src.domain.services.coefficients import (
    coefficient,
    tc_oracle,
    tl_oracle,
)
from src.infrastructure.logging.logger import get_app_logger

SOURCES = ("formula", "oracle", "both")


class LookupCoefficientUseCase:
    """Look up T(n) from the closed formula, the ideal-count oracle or both.

    The formula is total and gives 0 off the residue class; the oracle is
    only defined on it and raises ``BadResidue`` elsewhere.
    """

    def __init__(self, logger=None) -> None:
        self._logger = logger or get_app_logger()

    def execute(self, kind: str, n: int, source: str = "formula") -> CommandResult:
        """Return one ``coeff`` record.

        Raises:
            ValueError: For an unknown source or |n| beyond the supported range.
            BadResidue: If the oracle is asked for n off the residue class.
        """
        kind = CoeffKind(kind.lower())
        if source not in SOURCES:
            raise ValueError(f"Unknown source '{source}'")
        if abs(n) > MAX_COEFF_INDEX:
            raise ValueError(
                f"|n| = {abs(n)} overflows the supported range {MAX_COEFF_INDEX}"
            )
        record = {"record": "coeff", "kind": kind.value, "n": n, "source": source}
        oracle = tc_oracle if kind is CoeffKind.TC else tl_oracle
        if source == "formula":
            record["value"] = coefficient(kind, n, Provenance.FORMULA)
            return CommandResult(records=(record,))
        oracle_value = oracle(n)
        if source == "oracle":
            record["value"] = oracle_value
            return CommandResult(records=(record,))
        formula_value = coefficient(kind, n, Provenance.FORMULA)
        record["value"] = formula_value
        record["agree"] = formula_value == oracle_value
        if not record["agree"]:
            self._logger.warning(
                f"{kind.value}({n}): formula {formula_value} "
                f"!= oracle {oracle_value}"
            )
        return CommandResult(records=(record,), passed=record["agree"])


__all__ = ["SOURCES", "LookupCoefficientUseCase"]

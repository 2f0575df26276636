"""Use case checking the root-of-unity formulas for T_C(±p) and T_L(±p)."""

from src.application.ports.records import CommandResult
from src.domain.models.coefficients import CoeffKind
from src.domain.services.coefficients import tc_formula, tl_formula
from src.domain.services.quantum_forms import identity_tc, identity_tl
from src.infrastructure.logging.logger import get_app_logger


class VerifyIdentityUseCase:
    """Evaluate the finite root-of-unity sum and compare with ±T(±p)."""

    def __init__(self, logger=None) -> None:
        self._logger = logger or get_app_logger()

    def execute(self, kind: str, p: int) -> CommandResult:
        """Return one ``identity`` record.

        The expected value is T(p) for p in the +1 class and −T(−p) for p in
        the −1 class (mod 6 for T_C, mod 4 for T_L); it is 0 otherwise.

        Raises:
            BadPrime: If p is outside the admissible range.
            NonIntegerResult: If the sum is not an integer.
        """
        kind = CoeffKind(kind.lower())
        if kind is CoeffKind.TC:
            rhs = identity_tc(p, logger=self._logger)
            expected = self._expected(p, 6, tc_formula)
        else:
            rhs = identity_tl(p, logger=self._logger)
            expected = self._expected(p, 4, tl_formula)
        match = rhs == expected
        self._logger.info(
            f"identity {kind.value} p={p}: rhs={rhs} expected={expected}"
        )
        record = {
            "record": "identity",
            "kind": kind.value,
            "p": p,
            "rhs": rhs,
            "expected": expected,
            "match": match,
        }
        return CommandResult(records=(record,), passed=match)

    @staticmethod
    def _expected(p: int, modulus: int, formula) -> int:
        if p % modulus == 1:
            return formula(p)
        if p % modulus == modulus - 1:
            return -formula(-p)
        return 0


__all__ = ["VerifyIdentityUseCase"]

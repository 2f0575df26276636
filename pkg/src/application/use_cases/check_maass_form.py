"""Use case evaluating u_C and u_L and checking modularity and Hecke action."""

import mpmath

from src.application.ports.records import CommandResult
from src.domain.constants import DEFAULT_EPS
from src.domain.models.forms import MaassKind, MaassSpec
from src.domain.models.modular import Mat2
from src.domain.services.maass import (
    build_maass_form,
    eval_maass,
    hecke_maass,
    maass_eigenvalue,
    modularity_residual,
)
from src.domain.services.modular_group import generator_r, mat_act
from src.infrastructure.logging.logger import get_app_logger
from src.utils.rational_utils import complex_parts

ACTIONS = ("eval", "modularity", "hecke")
MODULARITY_TOLERANCE = 1e-8
HECKE_TOLERANCE = 1e-6


class CheckMaassFormUseCase:
    """Numerical checks on a Maass wave form at one point z = x + iy.

    * ``eval``: the value, with the truncation error bound used.
    * ``modularity``: |u(γz) − ν(γ)u(z)|, γ = R by default.
    * ``hecke``: |T_p u(z) − T(±p)·u(z)|.

    The coefficient table is sized for the lowest point the action visits.
    """

    def __init__(
        self,
        eps: float = DEFAULT_EPS,
        precision: int = 30,
        logger=None,
    ) -> None:
        self._eps = eps
        self._precision = precision
        self._logger = logger or get_app_logger()

    def execute(
        self,
        form: str,
        action: str,
        x: float,
        y: float,
        p: int | None = None,
        gamma: Mat2 | None = None,
    ) -> CommandResult:
        """Return one ``maass`` record.

        Raises:
            ValueError: For an unknown action or a missing prime.
            ConvergenceError: If a point lies below the height floor.
            NotInGroup: If γ is not in the form's group.
            BadPrime: If p is not admissible.
        """
        kind = MaassKind(form.lower())
        if action not in ACTIONS:
            raise ValueError(f"Unknown action '{action}'")
        spec = MaassSpec.for_kind(kind)
        z = mpmath.mpc(x, y)
        record = {
            "record": "maass",
            "form": kind.value,
            "action": action,
            "x": x,
            "y": y,
            "error_bound": self._eps,
        }
        if action == "eval":
            maass = build_maass_form(kind, y_min=y, eps=self._eps)
            value = eval_maass(maass, z, self._eps, self._precision)
            record["re"], record["im"] = complex_parts(value)
            record["passed"] = True
            return CommandResult(records=(record,))
        if action == "modularity":
            gamma = gamma or generator_r(spec.level)
            with mpmath.workdps(self._precision):
                y_image = float(mpmath.im(mat_act(gamma, z)))
            maass = build_maass_form(kind, y_min=min(y, y_image), eps=self._eps)
            residual = modularity_residual(
                maass, gamma, z, self._eps, self._precision
            )
            record["gamma"] = [int(e) for e in gamma.entries()]
            tolerance = MODULARITY_TOLERANCE
        else:
            if p is None:
                raise ValueError("The hecke action needs a prime p")
            term_eps = self._eps / (p + 2)
            # The lowest of the p + 1 points has Im = y/p.
            maass = build_maass_form(kind, y_min=0.99 * y / p, eps=term_eps)
            image = hecke_maass(
                maass, p, z, self._eps, self._precision, logger=self._logger
            )
            eigenvalue = maass_eigenvalue(spec, p)
            value = eval_maass(maass, z, self._eps, self._precision)
            residual = float(abs(image - eigenvalue * value))
            record["p"] = p
            record["eigenvalue"] = eigenvalue
            record["re"], record["im"] = complex_parts(image)
            tolerance = HECKE_TOLERANCE
        record["residual"] = residual
        record["tolerance"] = tolerance
        record["passed"] = residual < tolerance
        self._logger.info(
            f"{kind.value} {action} at {x}+{y}i: residual {residual:.3e}"
        )
        return CommandResult(records=(record,), passed=record["passed"])


__all__ = [
    "ACTIONS",
    "MODULARITY_TOLERANCE",
    "HECKE_TOLERANCE",
    "CheckMaassFormUseCase",
]

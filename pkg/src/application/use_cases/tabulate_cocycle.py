"""Use case tabulating the period cocycle h_γ(x) on a rational grid.

With a Hecke prime the cocycle H of T_p^∞ f is tabulated next to h and
compared with λ_p·h exactly before anything is embedded.
"""

from fractions import Fraction
from functools import partial

from src.application.ports.records import CommandResult, Record
from src.application.ports.tasks import TaskRunnerPort
from src.domain.errors import DomainError, NotInGroup, PoleError
from src.domain.models.forms import QuantumForm
from src.domain.models.modular import Mat2
from src.domain.services.modular_group import gamma0_member
from src.domain.services.quantum_forms import cocycle, hecke_eigenvalue
from src.infrastructure.logging.logger import get_app_logger
from src.utils.rational_utils import complex_parts


def _cocycle_row(
    form: QuantumForm,
    gamma: Mat2,
    hecke_p: int | None,
    precision: int,
    x: Fraction,
) -> tuple[Record, bool]:
    """One CSV row and whether H = λ·h held there (True without a prime)."""
    row: Record = {"record": "cocycle", "x": float(x)}
    names = ["re_h", "im_h"] + (["re_H", "im_H"] if hecke_p else [])
    try:
        h = cocycle(form, gamma, x)
        H = cocycle(form, gamma, x, hecke_p=hecke_p) if hecke_p else None
    except (PoleError, DomainError):
        row.update(dict.fromkeys(names))
        return row, True
    row["re_h"], row["im_h"] = complex_parts(h.approx(precision))
    if H is None:
        return row, True
    row["re_H"], row["im_H"] = complex_parts(H.approx(precision))
    return row, H.exact == h.exact * hecke_eigenvalue(form, hecke_p)


class TabulateCocycleUseCase:
    """Emit x, re_h, im_h[, re_H, im_H] for every grid point.

    Points outside the form's domain, and the pole x = −d/c, are emitted
    with empty value cells.
    """

    def __init__(
        self,
        runner: TaskRunnerPort | None = None,
        precision: int = 30,
        logger=None,
    ) -> None:
        self._runner = runner
        self._precision = precision
        self._logger = logger or get_app_logger()

    def execute(
        self,
        form: str,
        gamma: Mat2,
        grid: list[Fraction],
        hecke_p: int | None = None,
    ) -> CommandResult:
        """Tabulate the cocycle.

        Raises:
            NotInGroup: If γ ∉ Γ₀(level).
            BadPrime: If hecke_p is not admissible for the form.
        """
        form = QuantumForm(form.lower())
        if not gamma0_member(gamma, form.level):
            raise NotInGroup(f"{gamma} is not in Γ0({form.level})")
        if hecke_p is not None:
            self._logger.info(
                f"Hecke eigenvalue of T_{hecke_p} on {form.value}: "
                f"{hecke_eigenvalue(form, hecke_p)}"
            )
        work = partial(_cocycle_row, form, gamma, hecke_p, self._precision)
        points = sorted(grid)
        if self._runner is None:
            outcomes = [work(x) for x in points]
        else:
            outcomes = self._runner.map(work, points)
        mismatches = [row["x"] for row, ok in outcomes if not ok]
        if mismatches:
            self._logger.warning(
                f"H != λ·h at {len(mismatches)} points, first x = {mismatches[0]}"
            )
        skipped = sum(1 for row, _ in outcomes if row["re_h"] is None)
        self._logger.info(
            f"Cocycle of {form.value}: {len(points)} points, {skipped} empty"
        )
        return CommandResult(
            records=tuple(row for row, _ in outcomes),
            passed=not mismatches,
        )


__all__ = ["TabulateCocycleUseCase"]

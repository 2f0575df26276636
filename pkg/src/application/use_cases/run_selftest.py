"""Use case running the fast end-to-end checks of the library."""

from collections.abc import Callable
from fractions import Fraction

import mpmath

from src.application.ports.records import CommandResult
from src.domain.errors import HeckeLabError
from src.domain.models.coefficients import CoeffKind, Provenance
from src.domain.models.forms import MaassKind, QuantumForm
from src.domain.services.bessel import bessel_k0, bessel_k0_reference
from src.domain.services.coefficients import (
    coefficient,
    residue_indices,
    tc_formula,
    tl_formula,
)
from src.domain.services.maass import build_maass_form, modularity_residual
from src.domain.services.modular_group import generator_r
from src.domain.services.multipliers import compat_check
from src.domain.services.qseries import (
    combine_phi,
    combine_w,
    series_sigma,
    series_sigma_adh,
)
from src.domain.services.quantum_forms import (
    cocycle,
    eval_fc,
    eval_fc_dual,
    eval_form,
    hecke_eigenvalue,
    hecke_qmf,
    identity_tc,
    identity_tl,
)
from src.infrastructure.logging.logger import get_app_logger

SAMPLE_POINTS = (Fraction(0), Fraction(1, 3), Fraction(-2, 5), Fraction(3, 8))


class RunSelftestUseCase:
    """Run each check, record its verdict and keep going after failures."""

    def __init__(self, order: int = 200, seed: int = 0, logger=None) -> None:
        self._order = order
        self._seed = seed
        self._logger = logger or get_app_logger()

    def checks(self) -> list[tuple[str, Callable[[], tuple[bool, str]]]]:
        return [
            ("phi_matches_formula", self._phi_matches_formula),
            ("oracle_matches_formula", self._oracle_matches_formula),
            ("sigma_adh", self._sigma_adh),
            ("wcombo_matches_formula", self._wcombo_matches_formula),
            ("compat_level2", lambda: self._compat(2, 5)),
            ("compat_level4", lambda: self._compat(4, 3)),
            ("fc_dual_form", self._fc_dual_form),
            ("hecke_fc_23", lambda: self._quantum_hecke(QuantumForm.FC, 23)),
            ("hecke_fl_7", lambda: self._quantum_hecke(QuantumForm.FL, 7)),
            ("identity_tc_73", lambda: self._identity(identity_tc, 73, 2)),
            ("identity_tl_7", lambda: self._identity(identity_tl, 7, 2)),
            ("cocycle_fl_7", self._cocycle_fl),
            ("bessel_k0", self._bessel_k0),
            ("maass_modularity_uc", self._maass_modularity),
        ]

    def execute(self) -> CommandResult:
        records = []
        for name, check in self.checks():
            try:
                passed, detail = check()
            except HeckeLabError as exc:
                passed, detail = False, f"{type(exc).__name__}: {exc}"
            level = self._logger.info if passed else self._logger.warning
            level(f"selftest {name}: {'ok' if passed else 'FAILED'} {detail}")
            records.append(
                {
                    "record": "selftest",
                    "check": name,
                    "passed": passed,
                    "detail": detail,
                }
            )
        return CommandResult(
            records=tuple(records),
            passed=all(r["passed"] for r in records),
        )

    def _phi_matches_formula(self) -> tuple[bool, str]:
        table = combine_phi(self._order)
        bad = [n for n, v in table.items() if v != tc_formula(n)]
        return not bad, f"{len(table)} indices, mismatches {bad[:5]}"

    def _oracle_matches_formula(self) -> tuple[bool, str]:
        bad = []
        checked = 0
        for kind in (CoeffKind.TC, CoeffKind.TL):
            for n in residue_indices(kind.modulus, self._order):
                checked += 1
                formula = coefficient(kind, n, Provenance.FORMULA)
                if formula != coefficient(kind, n, Provenance.ORACLE):
                    bad.append((kind.value, n))
        return not bad, f"{checked} indices, mismatches {bad[:5]}"

    def _sigma_adh(self) -> tuple[bool, str]:
        order = self._order
        same = series_sigma(order).coeffs == series_sigma_adh(order).coeffs
        return same, f"order {order}"

    def _wcombo_matches_formula(self) -> tuple[bool, str]:
        table = combine_w(self._order)
        bad = [n for n, v in table.items() if v != tl_formula(n)]
        return not bad, f"{len(table)} indices, mismatches {bad[:5]}"

    def _compat(self, level: int, p: int) -> tuple[bool, str]:
        report = compat_check(level, p, random_samples=20, seed=self._seed)
        return report.compatible, (
            f"p={p}, {report.generators_checked} generators, "
            f"{report.random_checked} random"
        )

    def _fc_dual_form(self) -> tuple[bool, str]:
        bad = [x for x in SAMPLE_POINTS if eval_fc(x) != eval_fc_dual(x)]
        return not bad, f"{len(SAMPLE_POINTS)} points, mismatches {bad}"

    def _quantum_hecke(self, form: QuantumForm, p: int) -> tuple[bool, str]:
        eigenvalue = hecke_eigenvalue(form, p)
        points = [x for x in SAMPLE_POINTS if x.denominator % 4 != 2]
        bad = [
            x
            for x in points
            if hecke_qmf(form, p, x).exact != eval_form(form, x).exact * eigenvalue
        ]
        return not bad, f"eigenvalue {eigenvalue}, mismatches {bad}"

    @staticmethod
    def _identity(fn, p: int, expected: int) -> tuple[bool, str]:
        value = fn(p)
        return value == expected, f"value {value}, expected {expected}"

    def _cocycle_fl(self) -> tuple[bool, str]:
        gamma = generator_r(4)
        points = [Fraction(k, 9) for k in range(-8, 9)]
        bad = []
        for x in points:
            h = cocycle(QuantumForm.FL, gamma, x)
            H = cocycle(QuantumForm.FL, gamma, x, hecke_p=7)
            if H.exact != h.exact * 2:
                bad.append(x)
        return not bad, f"{len(points)} points, mismatches {bad}"

    @staticmethod
    def _bessel_k0() -> tuple[bool, str]:
        worst = 0.0
        for y in ("0.05", "0.7", "1.9", "2.1", "10", "50"):
            y = mpmath.mpf(y)
            diff = abs(bessel_k0(y, precision=30) - bessel_k0_reference(y, 30))
            worst = max(worst, float(diff))
        return worst < 1e-12, f"max difference {worst:.2e}"

    def _maass_modularity(self) -> tuple[bool, str]:
        gamma = generator_r(2)
        z = mpmath.mpc(0, 1)
        form = build_maass_form(MaassKind.UC, y_min=0.19)
        residual = modularity_residual(form, gamma, z)
        return residual < 1e-8, f"residual {residual:.2e}"


__all__ = ["SAMPLE_POINTS", "RunSelftestUseCase"]

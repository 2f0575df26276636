"""Use case expanding the q-series behind f_C and f_L."""

from fractions import Fraction

from src.application.ports.records import CommandResult
from src.domain.services.qseries import (
    WSeries,
    combine_phi,
    combine_w,
    series_sigma,
    series_sigma_adh,
    series_sigma_star,
    series_sigma_star_dual,
    series_w,
)
from src.infrastructure.logging.logger import get_app_logger
from src.utils.rational_utils import rational_text

_SINGLE = {
    "sigma": series_sigma,
    "sigma_star": series_sigma_star,
    "sigma_star_dual": series_sigma_star_dual,
    "sigma_adh": series_sigma_adh,
    "w1": lambda N: series_w(WSeries.W1, N),
    "w2": lambda N: series_w(WSeries.W2, N),
    "w1alt": lambda N: series_w(WSeries.W1ALT, N),
}
# Combined expansions indexed by n, with q-exponent |n|/modulus.
_COMBINED = {
    "phi": (combine_phi, 24),
    "wcombo": (combine_w, 8),
}
SERIES_NAMES = tuple(_SINGLE) + tuple(_COMBINED)


class ExpandSeriesUseCase:
    """Emit one record per nonzero coefficient of a named series."""

    def __init__(self, logger=None) -> None:
        self._logger = logger or get_app_logger()

    def execute(self, name: str, order: int) -> CommandResult:
        """Expand ``name`` to ``order`` (index k ≤ order, or |n| ≤ order).

        Raises:
            ValueError: For an unknown name or order < 1.
        """
        name = name.lower()
        if name in _SINGLE:
            series = _SINGLE[name](order)
            records = tuple(
                self._record(name, int(exponent - series.leading), exponent, coef)
                for exponent, coef in series.items()
            )
        elif name in _COMBINED:
            build, modulus = _COMBINED[name]
            table = build(order)
            records = tuple(
                self._record(name, n, Fraction(abs(n), modulus), coef)
                for n, coef in sorted(table.items())
                if coef
            )
        else:
            raise ValueError(
                f"Unknown series '{name}', expected one of "
                f"{', '.join(SERIES_NAMES)}"
            )
        self._logger.info(f"Expanded {name} to order {order}: {len(records)} terms")
        return CommandResult(records=records)

    @staticmethod
    def _record(name: str, index: int, exponent, coef) -> dict:
        return {
            "record": "series",
            "name": name,
            "index": index,
            "exponent": str(Fraction(exponent)),
            "coefficient": rational_text(coef),
        }


__all__ = ["SERIES_NAMES", "ExpandSeriesUseCase"]

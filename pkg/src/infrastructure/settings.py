"""Run configuration read from the environment and CLI flags."""

from dataclasses import dataclass, replace
import os
from pathlib import Path
from typing import Optional

import dotenv

from src.domain.constants import (
    DEFAULT_EPS,
    DEFAULT_PRECISION,
    DEFAULT_SERIES_ORDER,
    MIN_PRECISION,
)
from src.infrastructure.logging.logger import LOG_LEVELS, get_app_logger

OUTPUT_FORMATS = ("json", "csv", "plain")
DEFAULT_SEED = 20240


@dataclass(frozen=True)
class RunConfig:
    """Settings shared by every command.

    Attributes:
        precision: Working precision in significant decimal digits.
        series_order: Default truncation order of q-series.
        output_format: One of json, csv or plain.
        workers: Worker processes for sweeps; 1 runs serially.
        eps: Target absolute error of Maass evaluations.
        seed: Seed of the random checks.
        log_level: Name of the application log level.
        out: Output file, stdout when None.
    """

    precision: int = DEFAULT_PRECISION
    series_order: int = DEFAULT_SERIES_ORDER
    output_format: str = "json"
    workers: int = 1
    eps: float = DEFAULT_EPS
    seed: int = DEFAULT_SEED
    log_level: str = "INFO"
    out: Optional[Path] = None

    def __post_init__(self) -> None:
        if self.precision < MIN_PRECISION:
            raise ValueError(
                f"Precision must be at least {MIN_PRECISION}, "
                f"got {self.precision}"
            )
        if self.series_order < 1:
            raise ValueError(
                f"Series order must be positive, got {self.series_order}"
            )
        if self.output_format not in OUTPUT_FORMATS:
            raise ValueError(
                f"Unknown output format '{self.output_format}', "
                f"expected one of {', '.join(OUTPUT_FORMATS)}"
            )
        if self.workers < 1:
            raise ValueError(f"Workers must be positive, got {self.workers}")
        if not self.eps > 0:
            raise ValueError(f"Tolerance must be positive, got {self.eps}")
        if self.log_level not in LOG_LEVELS:
            raise ValueError(f"Unknown log level '{self.log_level}'")

    @classmethod
    def from_env(cls) -> "RunConfig":
        """Build the configuration from HECKE_* variables and a .env file.

        Unparseable or out-of-range values are logged and replaced by
        their defaults.

        Returns:
            RunConfig: Settings sourced from the environment.
        """
        dotenv.load_dotenv()
        logger = get_app_logger()
        defaults = cls()
        precision = cls._read(
            "HECKE_PRECISION", int, defaults.precision, logger,
            lambda v: v >= MIN_PRECISION,
        )
        series_order = cls._read(
            "HECKE_SERIES_ORDER", int, defaults.series_order, logger,
            lambda v: v >= 1,
        )
        output_format = cls._read(
            "HECKE_FORMAT", lambda raw: raw.strip().lower(),
            defaults.output_format, logger,
            lambda v: v in OUTPUT_FORMATS,
        )
        workers = cls._read(
            "HECKE_WORKERS", int, defaults.workers, logger, lambda v: v >= 1,
        )
        eps = cls._read(
            "HECKE_EPS", float, defaults.eps, logger, lambda v: v > 0,
        )
        seed = cls._read("HECKE_SEED", int, defaults.seed, logger)
        log_level = cls._read(
            "HECKE_LOG_LEVEL", lambda raw: raw.strip().upper(),
            defaults.log_level, logger, lambda v: v in LOG_LEVELS,
        )
        return cls(
            precision=precision,
            series_order=series_order,
            output_format=output_format,
            workers=workers,
            eps=eps,
            seed=seed,
            log_level=log_level,
        )

    def with_overrides(self, **overrides) -> "RunConfig":
        """Return a copy with the non-None overrides applied.

        Raises:
            ValueError: If an override is out of range.
        """
        values = {k: v for k, v in overrides.items() if v is not None}
        if "out" in values:
            values["out"] = Path(values["out"])
        return replace(self, **values)

    @staticmethod
    def _read(name, parse, default, logger, valid=None):
        raw = os.getenv(name)
        if raw is None or not raw.strip():
            return default
        try:
            value = parse(raw)
        except ValueError:
            logger.warning(f"Ignoring {name}={raw!r}: not parseable")
            return default
        if valid is not None and not valid(value):
            logger.warning(f"Ignoring {name}={raw!r}: out of range")
            return default
        return value


__all__ = ["OUTPUT_FORMATS", "DEFAULT_SEED", "RunConfig"]

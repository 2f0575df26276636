"""Use case sweeping the multiplier compatibility check over primes."""

from functools import partial

import sympy

from src.application.ports.records import CommandResult, Record
from src.application.ports.tasks import TaskRunnerPort
from src.domain.constants import SUPPORTED_LEVELS
from src.domain.services.multipliers import compat_check
from src.infrastructure.logging.logger import get_app_logger


def _compat_record(level: int, random_samples: int, seed: int, p: int) -> Record:
    report = compat_check(level, p, random_samples=random_samples, seed=seed)
    return {
        "record": "compat",
        "level": level,
        "p": p,
        "compatible": report.compatible,
        "generators_checked": report.generators_checked,
        "random_checked": report.random_checked,
        "witnesses": len(report.witnesses),
    }


class SweepCompatibilityUseCase:
    """Run ``compat_check`` for every prime in [pmin, pmax] coprime to the level.

    Primes are independent, so they are handed to the task runner; records
    come back in increasing p whatever the completion order.
    """

    def __init__(
        self,
        runner: TaskRunnerPort | None = None,
        random_samples: int = 100,
        seed: int = 0,
        logger=None,
    ) -> None:
        self._runner = runner
        self._random_samples = random_samples
        self._seed = seed
        self._logger = logger or get_app_logger()

    def execute(self, level: int, pmin: int, pmax: int) -> CommandResult:
        """Return one ``compat`` record per prime.

        Raises:
            ValueError: If the level is unsupported or pmin > pmax.
        """
        if level not in SUPPORTED_LEVELS:
            raise ValueError(f"Compatibility sweep needs level 2 or 4, got {level}")
        if pmin > pmax:
            raise ValueError(f"Empty prime range {pmin}..{pmax}")
        primes = [
            int(p) for p in sympy.primerange(pmin, pmax + 1) if level % p
        ]
        self._logger.info(
            f"Checking compatibility at level {level} for {len(primes)} primes"
        )
        work = partial(_compat_record, level, self._random_samples, self._seed)
        if self._runner is None:
            records = [work(p) for p in primes]
        else:
            records = self._runner.map(work, primes)
        failed = [r["p"] for r in records if not r["compatible"]]
        if failed:
            self._logger.warning(f"Compatibility fails at p = {failed}")
        return CommandResult(records=tuple(records), passed=not failed)


__all__ = ["SweepCompatibilityUseCase"]

"""Command-line front end: ``hecke-lab <command> ...``.

Every command writes records through the configured writer (JSON lines by
default) and exits 0 when all requested checks passed, 1 when a check
failed and 2 on invalid input or a library error.

Rationals are ``a/c`` strings. Arguments starting with a minus sign are
passed after ``--`` or as ``--flag=value``, e.g.
``hecke-lab qeval fl -- -2/5`` or ``hecke-lab cocycle fl --grid=-1:1:200``.
"""

import argparse
import sys
from contextlib import nullcontext

from src.application.ports.records import CommandResult
from src.application.use_cases.check_maass_form import (
    ACTIONS,
    CheckMaassFormUseCase,
)
from src.application.use_cases.evaluate_quantum_form import (
    ApplyHeckeOperatorUseCase,
    EvaluateQuantumFormUseCase,
)
from src.application.use_cases.expand_series import (
    SERIES_NAMES,
    ExpandSeriesUseCase,
)
from src.application.use_cases.lookup_coefficient import (
    SOURCES,
    LookupCoefficientUseCase,
)
from src.application.use_cases.run_selftest import RunSelftestUseCase
from src.application.use_cases.sweep_compatibility import (
    SweepCompatibilityUseCase,
)
from src.application.use_cases.tabulate_cocycle import TabulateCocycleUseCase
from src.application.use_cases.verify_identity import VerifyIdentityUseCase
from src.domain.errors import HeckeLabError
from src.domain.models.modular import Mat2
from src.infrastructure.container import (
    build_record_writer,
    build_run_config,
    build_task_runner,
    configure_logging,
)
from src.infrastructure.logging.logger import (
    LOG_LEVELS,
    get_app_logger,
    get_audit_logger,
)
from src.infrastructure.settings import OUTPUT_FORMATS, RunConfig
from src.utils.rational_utils import (
    parse_grid,
    parse_integers,
    parse_point,
    parse_rational,
)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_ERROR = 2


def _common_flags() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--precision", type=int, help="decimal digits")
    common.add_argument("--format", choices=OUTPUT_FORMATS, dest="format")
    common.add_argument("--workers", type=int, help="worker processes")
    common.add_argument("--out", help="write records to this file")
    common.add_argument("--order", type=int, help="series truncation order")
    common.add_argument("--eps", type=float, help="Maass target accuracy")
    common.add_argument("--seed", type=int, help="seed of random checks")
    common.add_argument(
        "--log-level", type=str.upper, choices=LOG_LEVELS, dest="log_level"
    )
    return common


def _build_parser() -> argparse.ArgumentParser:
    common = _common_flags()
    parser = argparse.ArgumentParser(
        prog="hecke-lab",
        description="Hecke operators on Maass forms and quantum modular forms.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    coeff = sub.add_parser("coeff", parents=[common], help="T_C(n) or T_L(n)")
    coeff.add_argument("kind", choices=("tc", "tl"))
    coeff.add_argument("n", type=int)
    coeff.add_argument("--source", choices=SOURCES, default="formula")

    series = sub.add_parser("series", parents=[common], help="q-series terms")
    series.add_argument("name", choices=SERIES_NAMES)

    qeval = sub.add_parser("qeval", parents=[common], help="f_C(x) or f_L(x)")
    qeval.add_argument("form", choices=("fc", "fl"))
    qeval.add_argument("x", type=parse_rational)

    hecke = sub.add_parser("hecke", parents=[common], help="T_p^∞ f(x)")
    hecke.add_argument("form", choices=("fc", "fl"))
    hecke.add_argument("p", type=int)
    hecke.add_argument("x", type=parse_rational)

    identity = sub.add_parser(
        "identity", parents=[common], help="root-of-unity formula for T(±p)"
    )
    identity.add_argument("kind", choices=("tc", "tl"))
    identity.add_argument("p", type=int)

    compat = sub.add_parser(
        "compat", parents=[common], help="multiplier compatibility sweep"
    )
    compat.add_argument("level", type=int, choices=(2, 4))
    compat.add_argument("pmin", type=int)
    compat.add_argument("pmax", type=int)
    compat.add_argument("--samples", type=int, default=100)

    cocycle = sub.add_parser(
        "cocycle", parents=[common], help="period cocycle on a rational grid"
    )
    cocycle.add_argument("form", choices=("fc", "fl"))
    cocycle.add_argument("--gamma", required=True, help="a,b,c,d")
    cocycle.add_argument("--grid", default="-1:1:200", help="lo:hi:count")
    cocycle.add_argument("--hecke-p", type=int, dest="hecke_p")

    maass = sub.add_parser("maass", parents=[common], help="Maass form checks")
    maass.add_argument("form", choices=("uc", "ul"))
    maass.add_argument("action", choices=ACTIONS)
    maass.add_argument("--z", required=True, help="x,y")
    maass.add_argument("--p", type=int)
    maass.add_argument("--gamma", help="a,b,c,d (default R)")

    selftest = sub.add_parser(
        "selftest", parents=[common], help="fast end-to-end checks"
    )
    selftest.set_defaults(selftest_order=200)
    return parser


def _parse_gamma(value: str | None) -> Mat2 | None:
    if value is None:
        return None
    return Mat2.of(*parse_integers(value, 4))


def _run_coeff(args, config: RunConfig, logger) -> CommandResult:
    return LookupCoefficientUseCase(logger=logger).execute(
        args.kind, args.n, args.source
    )


def _run_series(args, config: RunConfig, logger) -> CommandResult:
    return ExpandSeriesUseCase(logger=logger).execute(
        args.name, config.series_order
    )


def _run_qeval(args, config: RunConfig, logger) -> CommandResult:
    use_case = EvaluateQuantumFormUseCase(config.precision, logger=logger)
    return use_case.execute(args.form, args.x)


def _run_hecke(args, config: RunConfig, logger) -> CommandResult:
    use_case = ApplyHeckeOperatorUseCase(config.precision, logger=logger)
    return use_case.execute(args.form, args.p, args.x)


def _run_identity(args, config: RunConfig, logger) -> CommandResult:
    return VerifyIdentityUseCase(logger=logger).execute(args.kind, args.p)


def _run_compat(args, config: RunConfig, logger) -> CommandResult:
    use_case = SweepCompatibilityUseCase(
        runner=build_task_runner(config),
        random_samples=args.samples,
        seed=config.seed,
        logger=logger,
    )
    return use_case.execute(args.level, args.pmin, args.pmax)


def _run_cocycle(args, config: RunConfig, logger) -> CommandResult:
    use_case = TabulateCocycleUseCase(
        runner=build_task_runner(config),
        precision=config.precision,
        logger=logger,
    )
    return use_case.execute(
        args.form,
        _parse_gamma(args.gamma),
        parse_grid(args.grid),
        hecke_p=args.hecke_p,
    )


def _run_maass(args, config: RunConfig, logger) -> CommandResult:
    x, y = parse_point(args.z)
    use_case = CheckMaassFormUseCase(
        eps=config.eps, precision=config.precision, logger=logger
    )
    return use_case.execute(
        args.form,
        args.action,
        x,
        y,
        p=args.p,
        gamma=_parse_gamma(args.gamma),
    )


def _run_selftest(args, config: RunConfig, logger) -> CommandResult:
    order = args.order or args.selftest_order
    return RunSelftestUseCase(order=order, seed=config.seed, logger=logger).execute()


_HANDLERS = {
    "coeff": _run_coeff,
    "series": _run_series,
    "qeval": _run_qeval,
    "hecke": _run_hecke,
    "identity": _run_identity,
    "compat": _run_compat,
    "cocycle": _run_cocycle,
    "maass": _run_maass,
    "selftest": _run_selftest,
}


def _emit(result: CommandResult, config: RunConfig) -> None:
    if config.out is None:
        target = nullcontext(sys.stdout)
    else:
        target = open(config.out, "w", encoding="utf-8", newline="")
    with target as stream:
        build_record_writer(config, stream).write(result.records)


def main(argv: list[str] | None = None) -> int:
    """Parse arguments, run one command and return its exit status."""
    logger = get_app_logger()
    args = _build_parser().parse_args(argv)
    try:
        config = build_run_config(
            precision=args.precision,
            output_format=args.format,
            workers=args.workers,
            out=args.out,
            series_order=args.order,
            eps=args.eps,
            seed=args.seed,
            log_level=args.log_level,
        )
        configure_logging(config, logger)
        result = _HANDLERS[args.command](args, config, logger)
    except (HeckeLabError, ValueError) as exc:
        logger.error(f"{args.command}: {exc}")
        get_audit_logger().verdict(args.command, False, error=type(exc).__name__)
        return EXIT_ERROR
    _emit(result, config)
    get_audit_logger().verdict(
        args.command, result.passed, records=len(result.records)
    )
    if not result.passed:
        logger.warning(f"{args.command}: one or more checks failed")
        return EXIT_CHECK_FAILED
    return EXIT_OK


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())

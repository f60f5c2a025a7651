"""hypercover command-line application.

``run`` parses the arguments, executes one subcommand and prints its report.
Exit status: 0 when every check passed, 1 when a check failed, 2 on usage,
input or capacity errors.
"""
import sys
from collections.abc import Sequence

from loguru import logger
from pydantic import ValidationError

from src.cli.parser import build_parser
from src.core.errors import CapacityError, HypercoverError, UsageError
from src.core.settings import settings
from src.data_providers.file.encoder import ReportEncoder, write_text
from src.schemas.matrices import IntMatrix

EXIT_OK = 0
EXIT_FAILED_CHECK = 1
EXIT_USAGE = 2


def configure_logging(verbose: bool = False) -> None:
    """Route loguru to standard error only; standard output carries reports."""
    logger.remove()
    logger.add(sys.stderr, level="DEBUG" if verbose else settings.base_config.LOG_LEVEL)


def run(argv: Sequence[str] | None = None) -> int:
    """Run one hypercover command.

    Args:
        argv (Sequence[str] | None): Arguments without the program name; None reads ``sys.argv``

    Returns:
        int: The exit status
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        # argparse already printed usage or help
        return e.code if isinstance(e.code, int) else EXIT_USAGE
    configure_logging(getattr(args, "verbose", False))

    try:
        report = args.handler(args)
    except CapacityError as e:
        logger.error(f"{args.command} refused, capacity exceeded: {e}")
        return EXIT_USAGE
    except (HypercoverError, ValidationError) as e:
        logger.error(f"{args.command} failed: {e}")
        return EXIT_USAGE

    if getattr(args, "format", "json") == "csv":
        text = ReportEncoder.encode_csv(IntMatrix.model_validate(report.outputs["matrix"]))
    else:
        text = ReportEncoder.encode(report)
    out = getattr(args, "out", None)
    if out:
        try:
            write_text(out, text)
        except UsageError:
            return EXIT_USAGE
    sys.stdout.write(text)

    for check in report.checks:
        if not check.passed:
            logger.warning(f"Check failed: {check.name}")
    return EXIT_OK if report.passed else EXIT_FAILED_CHECK

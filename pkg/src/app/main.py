import argparse
import logging
import sys

from pydantic import ValidationError

from src.app.cli import approx, bench, bp, gen, match, selfstab, verify
from src.app.core.exceptions import SimulationError
from src.app.core.logging_config import configure_logging
from src.app.core.settings import get_settings
from src.app.models.experiment import ExitCode

logger = logging.getLogger("src.app")

COMMANDS = (gen, bp, match, approx, selfstab, verify, bench)


def create_parser() -> argparse.ArgumentParser:
    """Create and configure the command-line parser."""
    parser = argparse.ArgumentParser(
        prog="bpsim",
        description="Synchronous-round simulator for backup placement, matching and self-stabilization",
    )
    parser.add_argument("--log-level", help="Log level for stderr output (default from BPSIM_LOG_LEVEL)")

    # Include sub-commands
    subparsers = parser.add_subparsers(dest="command", required=True)
    for command in COMMANDS:
        command.register(subparsers)

    return parser


def main(argv: list[str] | None = None) -> int:
    """Parse ``argv``, run the command and return its exit code."""
    parser = create_parser()
    args = parser.parse_args(argv)
    configure_logging(args.log_level or get_settings().log_level)

    try:
        return int(args.handler(args))
    except (SimulationError, ValidationError, ValueError, OSError) as e:
        logger.error("%s: %s", args.command, e)
        return int(ExitCode.USAGE_ERROR)


if __name__ == "__main__":
    sys.exit(main())

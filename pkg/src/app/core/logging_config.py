"""Logging setup for the command-line harness."""
import logging
import sys

LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"
ROOT_LOGGER = "src.app"


def configure_logging(level: str | int = "WARNING") -> logging.Logger:
    """Attach a single stderr handler to the package logger.

    Stdout is reserved for command output, so log records never mix with
    generated graphs, placements or reports.

    Args:
        level: Level name or number for the package logger.

    Returns:
        The configured package logger.
    """
    logger = logging.getLogger(ROOT_LOGGER)
    logger.setLevel(level.upper() if isinstance(level, str) else level)

    # Rebind to the current stderr; a previous one may already be closed.
    for stale in [h for h in logger.handlers if getattr(h, "_bpsim", False)]:
        logger.removeHandler(stale)
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter(LOG_FORMAT))
    handler._bpsim = True  # type: ignore[attr-defined]
    logger.addHandler(handler)

    return logger

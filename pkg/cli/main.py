"""
Main entry point for the coxeter-cubes command-line tool.
"""

import logging
import sys
from typing import Optional, Sequence

from cli.commands import build_parser, run_command
from core.config import get_log_level, load_config

logger = logging.getLogger(__name__)


def _log_level(argv: Sequence[str]) -> str:
    """``--log-level`` from the command line, else the configured level."""
    requested: Optional[str] = None
    for index, arg in enumerate(argv):
        if arg == "--log-level" and index + 1 < len(argv):
            requested = argv[index + 1].upper()
        elif arg.startswith("--log-level="):
            requested = arg.split("=", 1)[1].upper()
    if requested in logging.getLevelNamesMapping():
        return requested
    return get_log_level()


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Run one command, print its output and return the exit code."""
    arguments = list(sys.argv[1:] if argv is None else argv)
    load_config()
    logging.basicConfig(
        level=_log_level(arguments),
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )

    result = run_command(arguments, build_parser())
    if result.output:
        print(result.output)
    if result.error:
        print(result.error, file=sys.stderr)
    logger.debug("Exit code %s", result.exit_code)
    return result.exit_code


if __name__ == "__main__":
    raise SystemExit(main())

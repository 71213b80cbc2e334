"""Command-line interface for coxeter-cubes."""

from cli.commands import CommandResult, build_parser, run_command

__all__ = ["CommandResult", "build_parser", "run_command"]

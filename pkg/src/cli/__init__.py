"""Command-line interface: argument parser and subcommand handlers."""

from .arguments import build_parser
from .commands import run_command

__all__ = ['build_parser', 'run_command']

"""The ``wbench`` command line front end."""

from .main import emit, main, run_command
from .parser import WorkbenchArgumentParser, build_parser

__all__ = ["WorkbenchArgumentParser", "build_parser", "emit", "main", "run_command"]

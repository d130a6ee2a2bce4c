import argparse
import logging
import sys
from collections.abc import Sequence
from typing import Optional, TextIO

from ..client import Workbench
from ..config import OutputFormat, WorkbenchConfig
from ..errors import WorkbenchException
from ..exprio import Report
from ..utils import ExitCode
from .parser import build_parser

logger = logging.getLogger(__name__)

_CONFIG_KEYS = ("n", "mode", "degree_bound", "seed", "output", "step_budget", "rules_path")


def _configure_logging(verbose: bool):
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )


def _config_from_args(args: argparse.Namespace) -> WorkbenchConfig:
    overrides = {key: getattr(args, key, None) for key in _CONFIG_KEYS}
    return WorkbenchConfig.from_env(
        **overrides,
        timing=getattr(args, "timing", False),
        verbose=getattr(args, "verbose", False),
    )


def run_command(bench: Workbench, args: argparse.Namespace) -> Report:
    """Dispatch a parsed command line to the workbench."""
    command = args.command
    if command == "central":
        return bench.central(args.r_max, args.formula)
    if command == "verify":
        return bench.verify(args.r, args.probes)
    if command == "confluence":
        return bench.confluence(args.samples)
    if command == "dims":
        return bench.dims(args.degree)
    if command == "fold":
        return bench.fold(args.type_rank)
    if command == "table1":
        return bench.table1(args.type_name, args.orbit_class)
    if command == "coinv":
        return bench.coinv()
    if command == "kleinian":
        return bench.kleinian(args.m, args.jacobi_bound)
    if command == "nf":
        return bench.nf(args.expr)
    if command == "parse-check":
        return bench.parse_check(args.text)
    raise WorkbenchException(f"unknown command {command!r}")


def emit(report: Report, output: OutputFormat, stream: TextIO):
    text = report.to_json() if output is OutputFormat.JSON else report.to_text()
    stream.write(text + "\n")


def main(argv: Optional[Sequence[str]] = None, stdout: Optional[TextIO] = None) -> int:
    """
    Run ``wbench`` and return its exit code.

    Returns:
        int: 0 when every check passed, 2 on a mathematical failure, 3 when
        a rewrite budget ran out, 4 on usage or parse errors and 1 on
        anything unexpected.
    """
    stdout = stdout or sys.stdout
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else ExitCode.USAGE_ERROR.value

    _configure_logging(getattr(args, "verbose", False))
    try:
        config = _config_from_args(args)
        logger.debug("configuration: %s", config.asdict())
        report = run_command(Workbench(config), args)
    except WorkbenchException as exc:
        code = ExitCode.for_exception(exc)
        logger.debug("%s failed", args.command, exc_info=True)
        sys.stderr.write(f"{args.command}: {exc}\n")
        return code.value

    emit(report, config.output, stdout)
    if report.passed:
        return ExitCode.SUCCESS.value
    return ExitCode.MATHEMATICAL_FAILURE.value

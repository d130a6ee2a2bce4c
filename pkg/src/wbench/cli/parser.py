import argparse
import sys

from ..constants import (
    DEFAULT_CENTRAL_R_MAX,
    DEFAULT_CONFLUENCE_SAMPLES,
    DEFAULT_JACOBI_DEGREE_BOUND,
    DEFAULT_KLEINIAN_M,
)
from ..utils import ExitCode
from ..yangian import Mode

PROG = "wbench"


class WorkbenchArgumentParser(argparse.ArgumentParser):
    """An argument parser whose usage errors exit with the usage exit code."""

    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(ExitCode.USAGE_ERROR.value, f"{self.prog}: error: {message}\n")


def _probe_list(text: str) -> list[str]:
    probes = [p.strip() for p in text.split(",") if p.strip()]
    if not probes:
        raise argparse.ArgumentTypeError("expected a comma separated list of generators")
    return probes


def _common_options() -> argparse.ArgumentParser:
    # Options left out on the command line stay absent, so the environment
    # and the configuration defaults apply.
    common = argparse.ArgumentParser(add_help=False, argument_default=argparse.SUPPRESS)
    common.add_argument("--n", type=int, help="rank parameter, at least 2 (default: 2)")
    common.add_argument(
        "--mode", choices=[m.value for m in Mode], help="algebra mode (default: full)"
    )
    common.add_argument(
        "--degree-bound", dest="degree_bound", type=int, help="canonical degree bound (default: 12)"
    )
    common.add_argument("--seed", type=int, help="seed of randomized suites (default: 42)")
    common.add_argument("--output", choices=["text", "json"], help="report format (default: text)")
    common.add_argument(
        "--step-budget", dest="step_budget", type=int, help="rewrite steps per normal form"
    )
    common.add_argument("--rules", dest="rules_path", metavar="FILE", help="rule file to load")
    common.add_argument("--verbose", action="store_true", help="log at DEBUG level on stderr")
    common.add_argument("--timing", action="store_true", help="record wall time in reports")
    return common


def build_parser() -> argparse.ArgumentParser:
    """The ``wbench`` parser; global options are accepted before or after the subcommand."""
    common = _common_options()
    parser = WorkbenchArgumentParser(
        prog=PROG,
        description="Exact verification workbench for shifted Yangians and subregular W-algebras.",
        parents=[common],
    )
    commands = parser.add_subparsers(dest="command", metavar="COMMAND")
    commands.required = True

    def command(name: str, summary: str) -> argparse.ArgumentParser:
        return commands.add_parser(name, help=summary, description=summary, parents=[common])

    central = command("central", "compare the closed form of Z^(r) with the expanded series")
    central.add_argument("--r-max", dest="r_max", type=int, default=DEFAULT_CENTRAL_R_MAX)
    central.add_argument("--formula", choices=["corrected", "printed"], default="corrected")

    verify = command("verify", "reduce [Z^(r), g] for a list of probe generators")
    verify.add_argument("--r", type=int, default=1)
    verify.add_argument("--probes", type=_probe_list, default=None, metavar="G1,G2,...")

    confluence = command("confluence", "associativity and idempotence on random triples")
    confluence.add_argument("--samples", type=int, default=DEFAULT_CONFLUENCE_SAMPLES)

    dims = command("dims", "graded dimensions of the PBW basis")
    dims.add_argument("--degree", type=int, default=None)

    fold = command("fold", "compare Kazhdan degrees across a Dynkin folding")
    fold.add_argument("type_rank", metavar="TYPE_RANK")

    table = command("table1", "look up whether a Slodowy slice is a universal deformation")
    table.add_argument("type_name", metavar="TYPE")
    table.add_argument("orbit_class", metavar="ORBIT_CLASS")

    command("coinv", "the involution on elementary symmetric polynomials")

    kleinian = command("kleinian", "Poisson brackets of a type A Kleinian singularity")
    kleinian.add_argument("--m", type=int, default=DEFAULT_KLEINIAN_M)
    kleinian.add_argument(
        "--jacobi-bound", dest="jacobi_bound", type=int, default=DEFAULT_JACOBI_DEGREE_BOUND
    )

    nf = command("nf", "PBW normal form of an expression")
    nf.add_argument("expr", metavar="EXPR")

    parse_check = command("parse-check", "parse, print and reparse an expression")
    parse_check.add_argument("text", metavar="TEXT")

    return parser

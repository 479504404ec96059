"""
Argument parser for the cqc command.
"""
import argparse
import sys
from pathlib import Path
from typing import NoReturn, Tuple

from src.errors import EX_USAGE
from src.models.state import BoundaryFamily
from src.quantum.measurement import QUADRUPLE_CHOICES


class CqcArgumentParser(argparse.ArgumentParser):
    """ArgumentParser whose usage errors exit with EX_USAGE (64) instead of 2"""

    def error(self, message: str) -> NoReturn:
        self.print_usage(sys.stderr)
        self.exit(EX_USAGE, f"{self.prog}: error: {message}\n")


def dim_pair(text: str) -> Tuple[int, int]:
    """Parse 'MxN' into (M, N)"""
    try:
        left, right = text.lower().split("x")
        pair = int(left), int(right)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected MxN, got {text!r}")
    if pair[0] < 2 or pair[1] < 2:
        raise argparse.ArgumentTypeError(f"dimension pair {text!r} is below 2x2")
    return pair


def positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def unit_interval(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a number, got {text!r}")
    if not (0.0 <= value <= 1.0):
        raise argparse.ArgumentTypeError(f"{value} is outside [0, 1]")
    return value


def seed(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer seed, got {text!r}")
    if not (0 <= value < 2**64):
        raise argparse.ArgumentTypeError(f"seed {value} is not a 64-bit unsigned integer")
    return value


def _add_run_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--dims", type=dim_pair, nargs="+", required=True, metavar="MxN")
    parser.add_argument("--samples", type=positive_int, default=None,
                        help="samples per dimension pair (default: desk-scale count from settings)")
    parser.add_argument("--seed", type=seed, default=None, help="master seed")
    parser.add_argument("--workers", type=positive_int, default=None)
    parser.add_argument("--chunk-size", type=positive_int, default=None)
    parser.add_argument("--report", type=Path, default=None, help="append a summary block here")
    parser.add_argument("--dump-dir", type=Path, default=None,
                        help="write counterexample candidates here")


def build_parser() -> argparse.ArgumentParser:
    parser = CqcArgumentParser(
        prog="cqc",
        description="Evaluate and stress-test the complementary-quantum correlation relation.",
    )
    parser.add_argument("--log-level", default=None, choices=("DEBUG", "INFO", "WARNING", "ERROR"))
    parser.add_argument("--log-format", default=None, choices=("text", "json"))

    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    bounds = sub.add_parser("bounds", help="evaluate one state file")
    bounds.add_argument("state_file", type=Path)
    bounds.add_argument("--bases", choices=QUADRUPLE_CHOICES, default="comp-fourier")
    bounds.add_argument("--csv", type=Path, default=None, help="also write the report as one CSV row")

    sweep = sub.add_parser("werner-sweep", help="asymmetric Werner sweep over eta")
    sweep.add_argument("--p", type=unit_interval, default=0.75)
    sweep.add_argument("--grid", type=positive_int, default=201)
    sweep.add_argument("--out", type=Path, required=True)

    search = sub.add_parser("search", help="uniform random-state counterexample search")
    _add_run_options(search)
    search.add_argument("--out", type=Path, required=True)

    scatter = sub.add_parser("scatter", help="perturbed boundary-state scatter")
    _add_run_options(scatter)
    scatter.add_argument("--out", type=Path, required=True)
    scatter.add_argument("--epsilon-low", type=float, default=None)
    scatter.add_argument("--epsilon-high", type=float, default=None)
    scatter.add_argument("--lambda-grid", type=positive_int, default=None)

    pure = sub.add_parser("pure-check", help="pure states against arbitrary basis quadruples")
    _add_run_options(pure)

    make = sub.add_parser("make-state", help="write a state file for a named family")
    make.add_argument("family", choices=("werner", "bell", "mcm", "mixed", "boundary"))
    make.add_argument("--out", type=Path, required=True)
    make.add_argument("--p", type=unit_interval, default=0.75)
    make.add_argument("--eta", type=unit_interval, default=0.5)
    make.add_argument("--n", type=positive_int, default=2)
    make.add_argument("--m", type=positive_int, default=None, help="first dimension of a mixed state")
    make.add_argument("--mixture", choices=[f.value for f in BoundaryFamily],
                      default=BoundaryFamily.BELL_WITH_MCM.value)
    make.add_argument("--lam", type=unit_interval, default=0.5)

    return parser


__all__ = ["CqcArgumentParser", "build_parser", "dim_pair", "positive_int", "unit_interval", "seed"]

"""
Subcommand handlers and the cqc entry point.

Each handler takes the parsed namespace and returns a process exit status:
0 success, 2 counterexample found, otherwise the exit code carried by the
CqcError that stopped it.
"""
import argparse
import logging
import sys
import uuid
from typing import Any, Callable, Dict, List, Optional

from pydantic import ValidationError

from src import __version__
from src.cli.output import (
    SCATTER_HEADER,
    SEARCH_HEADER,
    WERNER_HEADER,
    append_report,
    report_csv_header,
    report_csv_row,
    report_lines,
    scatter_row,
    search_row,
    summary_lines,
    werner_row,
    write_csv,
)
from src.cli.parser import build_parser
from src.config import settings
from src.errors import EX_USAGE, CqcError
from src.harness.search import (
    run_boundary_perturbation,
    run_pure_state_check,
    run_uniform_search,
    run_werner_sweep,
)
from src.models.search import SearchConfig, SearchMode, SearchSummary
from src.models.state import BoundaryFamily, BoundaryMixtureSpec, DensityMatrix
from src.quantum.bounds import evaluate
from src.quantum.measurement import quadruple_for
from src.quantum.state_io import read_state_file, write_state_file
from src.quantum.states import bell_phi_plus, boundary_mixture, maximally_mixed, mcm_state, werner
from src.utils.monitoring import flush_events, init_sentry
from src.utils.structured_logging import configure_logging

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_COUNTEREXAMPLE = 2


def _search_config(args: argparse.Namespace, mode: SearchMode, **extra: Any) -> SearchConfig:
    """SearchConfig from run flags; unset flags fall back to settings"""
    values: Dict[str, Any] = {"dims": args.dims, "mode": mode, **extra}
    optional = {
        "samples_per_dim": args.samples,
        "master_seed": args.seed,
        "workers": args.workers,
        "chunk_size": args.chunk_size,
        "dump_dir": args.dump_dir,
    }
    values.update({k: v for k, v in optional.items() if v is not None})
    return SearchConfig(**values)


def _finish_run(args: argparse.Namespace, summary: SearchSummary, failures: int) -> int:
    lines = summary_lines(summary, args.command)
    print("\n".join(lines))
    if args.report is not None:
        append_report(args.report, lines)
    return EXIT_COUNTEREXAMPLE if failures else EXIT_OK


def cmd_bounds(args: argparse.Namespace) -> int:
    rho = read_state_file(args.state_file)
    bases = quadruple_for(args.bases, rho.dim_a, rho.dim_b)
    report = evaluate(rho, bases)
    print("\n".join(report_lines(report)))
    if args.csv is not None:
        write_csv(args.csv, report_csv_header(report), [report_csv_row(report)])
    return EXIT_OK


def cmd_werner_sweep(args: argparse.Namespace) -> int:
    write_csv(args.out, WERNER_HEADER, (werner_row(r) for r in run_werner_sweep(args.p, args.grid)))
    return EXIT_OK


def cmd_search(args: argparse.Namespace) -> int:
    run = run_uniform_search(_search_config(args, SearchMode.UNIFORM))
    write_csv(args.out, SEARCH_HEADER, (search_row(r) for r in run))
    return _finish_run(args, run.summary, run.summary.counterexamples)


def cmd_scatter(args: argparse.Namespace) -> int:
    extra: Dict[str, Any] = {}
    if args.epsilon_low is not None or args.epsilon_high is not None:
        extra["epsilon_range"] = (
            settings.epsilon_low if args.epsilon_low is None else args.epsilon_low,
            settings.epsilon_high if args.epsilon_high is None else args.epsilon_high,
        )
    if args.lambda_grid is not None:
        extra["lambda_grid"] = args.lambda_grid
    run = run_boundary_perturbation(_search_config(args, SearchMode.BOUNDARY_PERTURB, **extra))
    write_csv(args.out, SCATTER_HEADER, (scatter_row(r) for r in run))
    return _finish_run(args, run.summary, run.summary.counterexamples)


def cmd_pure_check(args: argparse.Namespace) -> int:
    summary = run_pure_state_check(_search_config(args, SearchMode.PURE_STATES))
    return _finish_run(args, summary, summary.violations)


def _named_state(args: argparse.Namespace) -> DensityMatrix:
    if args.family == "werner":
        return werner(args.p, args.eta)
    if args.family == "bell":
        return bell_phi_plus(args.n)
    if args.family == "mcm":
        return mcm_state(args.n)
    if args.family == "mixed":
        return maximally_mixed(args.m or args.n, args.n)
    return boundary_mixture(
        BoundaryMixtureSpec(family=BoundaryFamily(args.mixture), lam=args.lam, n=args.n)
    )


def cmd_make_state(args: argparse.Namespace) -> int:
    path = write_state_file(_named_state(args), args.out)
    print(path)
    return EXIT_OK


HANDLERS: Dict[str, Callable[[argparse.Namespace], int]] = {
    "bounds": cmd_bounds,
    "werner-sweep": cmd_werner_sweep,
    "search": cmd_search,
    "scatter": cmd_scatter,
    "pure-check": cmd_pure_check,
    "make-state": cmd_make_state,
}


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)

    level_name = (args.log_level or settings.log_level).upper()
    configure_logging(
        level=getattr(logging, level_name, logging.INFO),
        format_type=args.log_format or settings.log_format,
        run_id=str(uuid.uuid4()),
    )
    init_sentry(dsn=settings.sentry_dsn, environment=settings.environment, release=__version__)

    try:
        return HANDLERS[args.command](args)
    except CqcError as e:
        e.log_error(logger)
        print(f"cqc: error [{e.code}]: {e}", file=sys.stderr)
        return e.exit_code
    except ValidationError as e:
        logger.error(f"Invalid arguments: {e.error_count()} validation error(s)")
        print(f"cqc: error: {e}", file=sys.stderr)
        return EX_USAGE
    finally:
        flush_events()


__all__ = [
    "cmd_bounds",
    "cmd_werner_sweep",
    "cmd_search",
    "cmd_scatter",
    "cmd_pure_check",
    "cmd_make_state",
    "main",
]

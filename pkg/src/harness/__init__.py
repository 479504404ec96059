"""
Search harness: deterministic sampling runs over the CQC relation
"""
from src.harness.rng import log_uniform, stream_for
from src.harness.search import (
    SearchRun,
    boundary_point,
    run_boundary_perturbation,
    run_pure_state_check,
    run_uniform_search,
    run_werner_sweep,
)

__all__ = [
    "stream_for",
    "log_uniform",
    "SearchRun",
    "boundary_point",
    "run_uniform_search",
    "run_boundary_perturbation",
    "run_pure_state_check",
    "run_werner_sweep",
]

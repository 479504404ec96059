"""
Search Harness - Runs the experiment families over many sampled states

Three families are driven through the same machinery:
- uniform: random mixed states, evaluated with the computational/Fourier quadruple
- boundary-perturb: saturating mixtures rotated by exp(i eps H)
- pure-states: Haar pure states against random, non-unbiased quadruples

Work is cut into chunks of `chunk_size` sample indices per dimension pair.
Chunks are evaluated inline or by a process pool and consumed in submission
order, so the record stream depends on the SearchConfig only.
"""
import multiprocessing
import time
from typing import Iterator, List, NamedTuple, Optional, Tuple

import numpy as np

from src.config import settings
from src.errors import ConfigInvalid, NonSquareDim, ParamOutOfRange
from src.harness.dumps import dump_path, write_dump
from src.harness.rng import log_uniform, stream_for
from src.linalg.core import Subsystem
from src.models.measurement import BasisQuadruple
from src.models.search import (
    DimSummary,
    SampleRecord,
    SearchConfig,
    SearchMode,
    SearchSummary,
    WernerSweepRecord,
)
from src.models.state import BoundaryFamily, BoundaryMixtureSpec, DensityMatrix
from src.quantum.bounds import correlation_sum, evaluate, residual_uncertainty, witness_is_sound
from src.quantum.information import quantum_mutual_information
from src.quantum.measurement import (
    computational_basis,
    fourier_basis,
    pauli_quadruple,
    random_quadruple,
    standard_quadruple,
)
from src.quantum.states import (
    boundary_mixture,
    perturb,
    random_density_matrix,
    random_pure_state,
    werner,
)
from src.utils.monitoring import capture_counterexample
from src.utils.structured_logging import get_logger, get_run_id, set_run_id

logger = get_logger(__name__)

BOUNDARY_FAMILIES = (BoundaryFamily.BELL_WITH_MCM, BoundaryFamily.MCM_WITH_MM)

SAMPLING_MEASURES = {
    SearchMode.UNIFORM: "simplex x Haar",
    SearchMode.BOUNDARY_PERTURB: "boundary mixtures, exp(i eps H) with GUE H",
    SearchMode.PURE_STATES: "Haar pure states",
}

BASIS_LABELS = {
    SearchMode.UNIFORM: "comp-fourier",
    SearchMode.BOUNDARY_PERTURB: "comp-fourier",
    SearchMode.PURE_STATES: "haar-random",
}


class WorkUnit(NamedTuple):
    """A contiguous range of sample indices for one dimension pair"""
    cfg: SearchConfig
    dim_index: int
    dim_a: int
    dim_b: int
    start: int
    stop: int
    violation_threshold: float
    pure_threshold: float
    run_id: str = "-"  # spawned workers do not inherit the parent's module state


class Candidate(NamedTuple):
    rho: DensityMatrix
    bases: BasisQuadruple
    record: SampleRecord


def boundary_point(index: int, lambda_grid: int) -> Tuple[BoundaryFamily, float]:
    """Family and mixture weight visited at a boundary-mode sample index"""
    family = BOUNDARY_FAMILIES[index % 2]
    lam = ((index // 2) % lambda_grid) / (lambda_grid - 1)
    return family, lam


def _uniform_sample(unit: WorkUnit, index: int) -> Candidate:
    rng = stream_for(unit.cfg.master_seed, unit.dim_index, index)
    rho = random_density_matrix(unit.dim_a, unit.dim_b, rng)
    bases = standard_quadruple(unit.dim_a, unit.dim_b)
    report = evaluate(rho, bases, unit.violation_threshold)
    record = SampleRecord(
        dim_a=unit.dim_a,
        dim_b=unit.dim_b,
        index=index,
        family="uniform",
        mi_sum=report.mi_sum,
        qmi=report.qmi,
        gap=report.gap,
        residual_a=report.residual_a,
        residual_b=report.residual_b,
        entangled_witness=report.entangled_witness,
        witness_sound=witness_is_sound(rho) if report.entangled_witness else True,
        steering_witness=report.steering_witness,
    )
    return Candidate(rho, bases, record)


def _boundary_sample(unit: WorkUnit, index: int) -> Candidate:
    cfg = unit.cfg
    rng = stream_for(cfg.master_seed, unit.dim_index, index)
    family, lam = boundary_point(index, cfg.lambda_grid)
    # first pass over (family, lambda) stays on the boundary
    if index < 2 * cfg.lambda_grid:
        epsilon = 0.0
    else:
        epsilon = log_uniform(rng, *cfg.epsilon_range)
    base = boundary_mixture(BoundaryMixtureSpec(family=family, lam=lam, n=unit.dim_a))
    rho = perturb(base, epsilon, rng)
    bases = standard_quadruple(unit.dim_a, unit.dim_b)
    report = evaluate(rho, bases, unit.violation_threshold)
    record = SampleRecord(
        dim_a=unit.dim_a,
        dim_b=unit.dim_b,
        index=index,
        family=family.value,
        mi_sum=report.mi_sum,
        qmi=report.qmi,
        gap=report.gap,
        residual_a=report.residual_a,
        residual_b=report.residual_b,
        epsilon=epsilon,
        lam=lam,
        entangled_witness=report.entangled_witness,
        witness_sound=witness_is_sound(rho) if report.entangled_witness else True,
        steering_witness=report.steering_witness,
    )
    return Candidate(rho, bases, record)


def _pure_sample(unit: WorkUnit, index: int) -> Candidate:
    rng = stream_for(unit.cfg.master_seed, unit.dim_index, index)
    rho = random_pure_state(unit.dim_a, unit.dim_b, rng)
    bases = random_quadruple(unit.dim_a, unit.dim_b, rng)
    mi_qq, mi_rr = correlation_sum(rho, bases)
    mi_sum = mi_qq + mi_rr
    qmi = quantum_mutual_information(rho)
    record = SampleRecord(
        dim_a=unit.dim_a,
        dim_b=unit.dim_b,
        index=index,
        family="haar-pure",
        mi_sum=mi_sum,
        qmi=qmi,
        gap=qmi - mi_sum,
        residual_a=residual_uncertainty(
            rho, Subsystem.A, computational_basis(unit.dim_a), fourier_basis(unit.dim_a)
        ),
        residual_b=residual_uncertainty(
            rho, Subsystem.B, computational_basis(unit.dim_b), fourier_basis(unit.dim_b)
        ),
    )
    return Candidate(rho, bases, record)


_SAMPLERS = {
    SearchMode.UNIFORM: _uniform_sample,
    SearchMode.BOUNDARY_PERTURB: _boundary_sample,
    SearchMode.PURE_STATES: _pure_sample,
}


def candidate_threshold(mode: SearchMode, violation_threshold: float, pure_threshold: float) -> float:
    return pure_threshold if mode is SearchMode.PURE_STATES else violation_threshold


def candidate_kind(gap: float, threshold: float) -> Optional[str]:
    """Candidate label for a gap: counterexample below threshold, noise-negative below zero"""
    if gap < threshold:
        return "counterexample"
    if gap < 0.0:
        return "noise-negative"
    return None


def evaluate_chunk(unit: WorkUnit) -> Tuple[List[SampleRecord], DimSummary]:
    """
    Evaluate one work unit; runs in a worker process when workers > 1.

    Candidates are dumped here, where the state and bases are still at hand.
    """
    set_run_id(unit.run_id)
    sampler = _SAMPLERS[unit.cfg.mode]
    threshold = candidate_threshold(unit.cfg.mode, unit.violation_threshold, unit.pure_threshold)
    pure_threshold = unit.pure_threshold if unit.cfg.mode is SearchMode.PURE_STATES else None
    partial = DimSummary(dim_a=unit.dim_a, dim_b=unit.dim_b)
    records: List[SampleRecord] = []

    for index in range(unit.start, unit.stop):
        rho, bases, record = sampler(unit, index)
        records.append(record)
        partial.add(record, unit.violation_threshold, pure_threshold)

        kind = candidate_kind(record.gap, threshold)
        if kind and unit.cfg.dump_dir is not None:
            write_dump(
                unit.cfg.dump_dir,
                kind,
                rho,
                bases,
                gap=record.gap,
                qmi=record.qmi,
                mi_sum=record.mi_sum,
                master_seed=unit.cfg.master_seed,
                dim_index=unit.dim_index,
                sample_index=index,
                family=record.family,
                epsilon=record.epsilon,
                lam=record.lam,
            )

    return records, partial


class SearchRun:
    """
    A configured search: iterate for records in deterministic order.

    `summary` is available once iteration has finished; `collect()` runs to
    completion and returns both.
    """

    def __init__(
        self,
        cfg: SearchConfig,
        violation_threshold: Optional[float] = None,
        pure_threshold: Optional[float] = None,
    ):
        self.cfg = cfg
        self.violation_threshold = (
            settings.violation_threshold if violation_threshold is None else violation_threshold
        )
        self.pure_threshold = (
            settings.pure_violation_threshold if pure_threshold is None else pure_threshold
        )
        self._summary: Optional[SearchSummary] = None

    def work_units(self) -> Iterator[WorkUnit]:
        cfg = self.cfg
        for dim_index, (dim_a, dim_b) in enumerate(cfg.dims):
            total = cfg.samples_for(dim_a, dim_b)
            for start in range(0, total, cfg.chunk_size):
                yield WorkUnit(
                    cfg=cfg,
                    dim_index=dim_index,
                    dim_a=dim_a,
                    dim_b=dim_b,
                    start=start,
                    stop=min(start + cfg.chunk_size, total),
                    violation_threshold=self.violation_threshold,
                    pure_threshold=self.pure_threshold,
                    run_id=get_run_id(),
                )

    def _chunks(self) -> Iterator[Tuple[List[SampleRecord], DimSummary]]:
        if self.cfg.workers == 1:
            for unit in self.work_units():
                yield evaluate_chunk(unit)
            return
        with multiprocessing.Pool(self.cfg.workers) as pool:
            yield from pool.imap(evaluate_chunk, self.work_units())

    def _report_candidates(self, records: List[SampleRecord]) -> None:
        threshold = candidate_threshold(self.cfg.mode, self.violation_threshold, self.pure_threshold)
        for record in records:
            kind = candidate_kind(record.gap, threshold)
            if kind is None:
                continue
            path = None
            if self.cfg.dump_dir is not None:
                path = dump_path(self.cfg.dump_dir, kind, record.dim_a, record.dim_b, record.index)
            if kind == "counterexample":
                logger.warning(
                    f"Counterexample candidate {record.dim_key} #{record.index}: "
                    f"gap={record.gap:.3e} dump={path}"
                )
                capture_counterexample(
                    record,
                    extra={"master_seed": self.cfg.master_seed, "dump": str(path) if path else None},
                )
            else:
                logger.info(f"Noise-negative gap {record.gap:.3e} at {record.dim_key} #{record.index}")

    def __iter__(self) -> Iterator[SampleRecord]:
        cfg = self.cfg
        summary = SearchSummary(
            mode=cfg.mode,
            master_seed=cfg.master_seed,
            basis_label=BASIS_LABELS[cfg.mode],
            sampling_measure=SAMPLING_MEASURES[cfg.mode],
        )
        for dim_a, dim_b in cfg.dims:
            summary.merge_dim(DimSummary(dim_a=dim_a, dim_b=dim_b))

        logger.info(
            f"Starting {cfg.mode.value} run: dims={[f'{a}x{b}' for a, b in cfg.dims]}, "
            f"seed={cfg.master_seed}, workers={cfg.workers}"
        )
        started = time.perf_counter()

        for records, partial in self._chunks():
            summary.merge_dim(partial)
            self._report_candidates(records)
            yield from records

            done = summary.per_dim[partial.dim_key]
            if done.samples == cfg.samples_for(partial.dim_a, partial.dim_b):
                logger.info(
                    f"Dimension {done.dim_key} done: samples={done.samples}, "
                    f"min_gap={done.min_gap:.3e}, counterexamples={done.counterexamples}"
                )

        summary.wall_clock_seconds = time.perf_counter() - started
        self._summary = summary
        logger.info(
            f"Run finished in {summary.wall_clock_seconds:.1f}s, "
            f"counterexamples={summary.counterexamples}"
        )

    @property
    def summary(self) -> SearchSummary:
        if self._summary is None:
            raise RuntimeError("summary is available after the record stream is exhausted")
        return self._summary

    def collect(self) -> Tuple[List[SampleRecord], SearchSummary]:
        records = list(self)
        return records, self.summary

    def drain(self) -> SearchSummary:
        """Run to completion, discarding records"""
        for _ in self:
            pass
        return self.summary


def _require_mode(cfg: SearchConfig, mode: SearchMode) -> None:
    if cfg.mode is not mode:
        raise ConfigInvalid(f"configuration mode is {cfg.mode.value}, expected {mode.value}")


def run_uniform_search(cfg: SearchConfig) -> SearchRun:
    """Uniform random-state counterexample search"""
    _require_mode(cfg, SearchMode.UNIFORM)
    return SearchRun(cfg)


def run_boundary_perturbation(cfg: SearchConfig) -> SearchRun:
    """
    Perturbed boundary-state scatter over N x N pairs.

    Raises:
        ConfigInvalid: mode is not boundary-perturb
        NonSquareDim: a dimension pair has M != N
    """
    _require_mode(cfg, SearchMode.BOUNDARY_PERTURB)
    for dim_a, dim_b in cfg.dims:
        if dim_a != dim_b:
            raise NonSquareDim(f"boundary states need N x N, got {dim_a}x{dim_b}")
    return SearchRun(cfg)


def run_pure_state_check(cfg: SearchConfig) -> SearchSummary:
    """Pure states against arbitrary quadruples; summary counts gaps below the pure threshold"""
    _require_mode(cfg, SearchMode.PURE_STATES)
    return SearchRun(cfg).drain()


def run_werner_sweep(p: float, eta_grid: int) -> Iterator[WernerSweepRecord]:
    """
    Asymmetric Werner states on a uniform eta grid over [0, 1], measured with
    sigma_x / sigma_y on both sides.
    """
    if not (0.0 <= p <= 1.0):
        raise ConfigInvalid(f"p={p} is outside [0, 1]")
    if eta_grid < 2:
        raise ConfigInvalid(f"eta grid needs at least 2 points, got {eta_grid}")
    return _werner_rows(p, eta_grid)


def _werner_rows(p: float, eta_grid: int) -> Iterator[WernerSweepRecord]:
    bases = pauli_quadruple("X", "Y")
    for index, eta in enumerate(np.linspace(0.0, 1.0, eta_grid)):
        try:
            rho = werner(p, float(eta))
        except ParamOutOfRange as e:
            raise ConfigInvalid(str(e)) from e
        report = evaluate(rho, bases)
        yield WernerSweepRecord(
            dim_a=2,
            dim_b=2,
            index=index,
            family="werner",
            mi_sum=report.mi_sum,
            qmi=report.qmi,
            gap=report.gap,
            residual_a=report.residual_a,
            residual_b=report.residual_b,
            entangled_witness=report.entangled_witness,
            steering_witness=report.steering_witness,
            eta=float(eta),
            berta_bound=report.berta_bound_a,
        )


__all__ = [
    "WorkUnit",
    "SearchRun",
    "boundary_point",
    "candidate_kind",
    "evaluate_chunk",
    "run_uniform_search",
    "run_boundary_perturbation",
    "run_pure_state_check",
    "run_werner_sweep",
]

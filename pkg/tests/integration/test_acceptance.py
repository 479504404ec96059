"""
End-to-end acceptance checks for the CQC toolkit.

Fast checks run by default; the desk-scale searches are marked slow and
run with `pytest -m slow`.
"""
import time

import numpy as np
import pytest

from src.cli import main
from src.harness.search import (
    run_boundary_perturbation,
    run_pure_state_check,
    run_uniform_search,
    run_werner_sweep,
)
from src.models.search import SearchConfig, SearchMode
from src.models.state import BoundaryFamily, BoundaryMixtureSpec
from src.quantum.bounds import evaluate
from src.quantum.information import classical_mutual_information, quantum_mutual_information
from src.quantum.measurement import (
    dephase,
    joint_distribution,
    pauli_quadruple,
    random_mub_quadruple,
    standard_quadruple,
)
from src.quantum.states import boundary_mixture, random_density_matrix, werner

pytestmark = pytest.mark.integration

DESK_DIMS = [(2, 2), (2, 3), (3, 3)]
LARGE_DIMS = [(2, 4), (3, 4), (4, 4)]
SEARCH_MINUTES = 10


class TestWernerPoint:
    """Single-state evaluation"""

    def test_point_check_is_fast(self):
        started = time.perf_counter()
        report = evaluate(werner(0.75, 0.5), pauli_quadruple("X", "Y"))
        assert time.perf_counter() - started < 1.0
        assert report.qmi == pytest.approx(1.006607, abs=1e-6)
        assert report.mi_sum == pytest.approx(0.912872, abs=1e-6)
        assert report.gap == pytest.approx(0.093735, abs=1e-6)

    def test_sweep_properties(self):
        rows = list(run_werner_sweep(0.75, 201))
        assert len(rows) == 201
        assert all(r.mi_sum <= r.qmi + 1e-9 for r in rows)
        assert all(r.mi_sum >= r.berta_bound - 1e-9 for r in rows)
        # strict improvement over the classical bound away from the symmetric point
        assert max(r.mi_sum - r.berta_bound for r in rows) > 0.05


class TestSaturation:
    """Boundary mixtures sit exactly on the relation"""

    @pytest.mark.parametrize("n", [2, 3, 4])
    @pytest.mark.parametrize("family", list(BoundaryFamily))
    def test_gap_vanishes(self, n, family):
        for lam in np.linspace(0.0, 1.0, 11):
            rho = boundary_mixture(BoundaryMixtureSpec(family=family, lam=float(lam), n=n))
            report = evaluate(rho, standard_quadruple(n, n))
            assert abs(report.gap) <= 1e-8


class TestDephasingIdentity:
    """QMI of the measured state equals the classical mutual information"""

    def test_thousand_states(self):
        rng = np.random.default_rng(7)
        for k in range(1000):
            dims = DESK_DIMS[k % len(DESK_DIMS)]
            rho = random_density_matrix(*dims, rng)
            bases = random_mub_quadruple(*dims, rng)
            table = joint_distribution(rho, bases.ra, bases.rb)
            assert quantum_mutual_information(dephase(rho, bases.ra, bases.rb)) == pytest.approx(
                classical_mutual_information(table), abs=1e-9
            )


class TestDeterminism:
    """Output does not depend on the worker count"""

    def test_one_vs_two_workers(self, tmp_path):
        outputs = []
        for workers in (1, 2):
            out = tmp_path / f"w{workers}.csv"
            argv = ["search", "--dims", "2x2", "2x3", "--samples", "60", "--chunk-size", "16",
                    "--seed", "11", "--workers", str(workers), "--out", str(out)]
            assert main(argv) == 0
            outputs.append(out.read_bytes())
        assert outputs[0] == outputs[1]


@pytest.mark.slow
@pytest.mark.timeout(7200)
class TestDeskScale:
    """Desk-scale searches (default sample counts)"""

    def test_uniform_search(self):
        cfg = SearchConfig(dims=DESK_DIMS + LARGE_DIMS, mode=SearchMode.UNIFORM, workers=4)
        summary = run_uniform_search(cfg).drain()

        assert summary.wall_clock_seconds < SEARCH_MINUTES * 60
        assert summary.counterexamples == 0
        assert summary.min_gap >= -1e-7
        for dim_a, dim_b in DESK_DIMS:
            assert summary.per_dim[f"{dim_a}x{dim_b}"].samples == 100_000
        for dim_a, dim_b in LARGE_DIMS:
            assert summary.per_dim[f"{dim_a}x{dim_b}"].samples == 10_000
        for dim in summary.per_dim.values():
            assert dim.min_residual_a >= -1e-9
            assert dim.min_residual_b >= -1e-9
            assert dim.witness_unsound == 0
        assert summary.per_dim["3x3"].mean_residual_a > 0.01

    def test_boundary_scatter(self):
        cfg = SearchConfig(dims=[(2, 2), (3, 3)], mode=SearchMode.BOUNDARY_PERTURB, workers=4)
        summary = run_boundary_perturbation(cfg).drain()
        assert summary.counterexamples == 0
        assert summary.per_dim["3x3"].max_qmi <= 2 * np.log2(3) + 1e-9

    @pytest.mark.parametrize("dims,samples", [((2, 2), 10_000), ((4, 4), 1_000)])
    def test_pure_states(self, dims, samples):
        cfg = SearchConfig(dims=[dims], samples_per_dim=samples, mode=SearchMode.PURE_STATES, workers=4)
        summary = run_pure_state_check(cfg)

        (dim,) = summary.per_dim.values()
        assert dim.samples == samples
        assert summary.violations == 0
        assert summary.min_gap >= -1e-9
        assert dim.min_residual_a >= -1e-9
        assert dim.min_residual_b >= -1e-9

    def test_one_vs_four_workers(self, tmp_path):
        outputs = []
        for workers in (1, 4):
            out = tmp_path / f"w{workers}.csv"
            argv = ["search", "--dims", "2x2", "2x3", "3x3", "2x4", "3x4", "4x4", "--samples", "2000",
                    "--seed", "5", "--workers", str(workers), "--out", str(out)]
            assert main(argv) == 0
            outputs.append(out.read_bytes())
        assert outputs[0] == outputs[1]

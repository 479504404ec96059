import logging
import os

import numpy as np
import pytest

# Keep test runs independent of a developer's .env / shell.
os.environ.setdefault("CQC_ENVIRONMENT", "development")
os.environ.setdefault("CQC_WORKERS", "1")
os.environ.pop("CQC_SENTRY_DSN", None)
os.environ.pop("CQC_DUMP_DIR", None)

from src.models.state import DensityMatrix  # noqa: E402
from src.quantum.measurement import pauli_quadruple, standard_quadruple  # noqa: E402
from src.quantum.state_io import write_state_file  # noqa: E402
from src.quantum.states import bell_phi_plus, maximally_mixed, mcm_state, werner  # noqa: E402
from src.utils.structured_logging import get_run_id, set_run_id  # noqa: E402


@pytest.fixture(autouse=True)
def restore_logging():
    """cqc main() reconfigures the root logger; put it back after each test"""
    root = logging.getLogger()
    handlers, level, run_id = root.handlers[:], root.level, get_run_id()
    yield root
    root.handlers[:] = handlers
    root.setLevel(level)
    set_run_id(run_id)


@pytest.fixture
def rng():
    return np.random.default_rng(20140101)


@pytest.fixture
def bell2():
    return bell_phi_plus(2)


@pytest.fixture
def mixed2():
    return maximally_mixed(2, 2)


@pytest.fixture
def mcm2():
    return mcm_state(2)


@pytest.fixture
def near_product():
    """|00><00| with a 1.5e-9 admixture of Psi+: marginal eigenvalues fall below the clip, the joint one does not"""
    weight = 1.5e-9
    psi_plus = np.array([0.0, 1.0, 1.0, 0.0]) / np.sqrt(2.0)
    matrix = (1.0 - weight) * np.diag([1.0, 0.0, 0.0, 0.0]) + weight * np.outer(psi_plus, psi_plus)
    return DensityMatrix(matrix=matrix, dim_a=2, dim_b=2)


@pytest.fixture
def werner_point():
    """Werner(p=3/4, eta=1/2): spectrum {13/16, 1/16 x 3}"""
    return werner(0.75, 0.5)


@pytest.fixture
def comp_fourier_2x2():
    return standard_quadruple(2, 2)


@pytest.fixture
def pauli_xy():
    return pauli_quadruple("X", "Y")


@pytest.fixture
def state_file(tmp_path):
    def _write(rho, name="state.json"):
        return write_state_file(rho, tmp_path / name)

    return _write

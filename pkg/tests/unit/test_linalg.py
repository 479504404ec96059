"""
Unit tests for the dense linear algebra substrate
"""
import numpy as np
import pytest

from src.errors import DimensionMismatch, NotHermitian, ParamOutOfRange
from src.linalg import (
    Subsystem,
    adjoint,
    as_matrix,
    eigvalsh,
    hermitian_eig,
    is_unitary,
    kron,
    matmul,
    partial_trace,
    trace,
)


pytestmark = pytest.mark.unit


class TestBasicOperations:
    """Coercion, products and traces"""

    def test_as_matrix_rejects_vectors(self):
        with pytest.raises(ParamOutOfRange):
            as_matrix([1.0, 2.0])

    def test_as_matrix_rejects_nan(self):
        with pytest.raises(ParamOutOfRange):
            as_matrix([[1.0, np.nan], [0.0, 1.0]])

    def test_adjoint(self):
        a = np.array([[1, 2j], [3, 4]])
        assert np.array_equal(adjoint(a), np.array([[1, 3], [-2j, 4]]))

    def test_matmul_shape_mismatch(self):
        with pytest.raises(DimensionMismatch):
            matmul(np.eye(2), np.eye(3))

    def test_trace_is_complex(self):
        assert trace([[1, 0], [0, 1j]]) == 1 + 1j

    def test_trace_non_square(self):
        with pytest.raises(DimensionMismatch):
            trace(np.ones((2, 3)))

    def test_kron_block_layout(self):
        # |0> on A, |1> on B sits at joint index 0 * 2 + 1
        a = np.diag([1.0, 0.0])
        b = np.diag([0.0, 1.0])
        assert np.argmax(np.diag(kron(a, b)).real) == 1

    def test_is_unitary(self):
        assert is_unitary(np.array([[0, 1], [1, 0]]))
        assert not is_unitary(np.array([[1, 1], [0, 1]]))
        assert not is_unitary(np.ones((2, 3)))


class TestHermitianEig:
    """Eigendecomposition checks"""

    def test_ascending_and_reconstructs(self, rng):
        g = rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4))
        h = g + g.conj().T
        values, vectors = hermitian_eig(h)
        assert np.all(np.diff(values) >= 0)
        assert np.allclose(vectors @ np.diag(values) @ vectors.conj().T, h, atol=1e-10)

    def test_not_hermitian(self):
        with pytest.raises(NotHermitian):
            hermitian_eig([[1, 1], [0, 1]])

    def test_non_square(self):
        with pytest.raises(DimensionMismatch):
            hermitian_eig(np.ones((2, 3)))

    def test_small_asymmetry_is_symmetrized(self):
        h = np.array([[1.0, 1e-12], [0.0, 2.0]])
        assert np.allclose(eigvalsh(h), [1.0, 2.0])


class TestPartialTrace:
    """Reduced states follow the k = i * dim_b + j layout"""

    def test_product_state(self, rng):
        a = np.diag([0.2, 0.8])
        b = np.diag([0.1, 0.3, 0.6])
        joint = np.kron(a, b)
        assert np.allclose(partial_trace(joint, 2, 3, keep=Subsystem.A), a)
        assert np.allclose(partial_trace(joint, 2, 3, keep="B"), b)

    def test_off_diagonal_blocks(self):
        psi = np.zeros(4)
        psi[0] = psi[3] = 1 / np.sqrt(2)
        rho = np.outer(psi, psi)
        assert np.allclose(partial_trace(rho, 2, 2, keep="A"), np.eye(2) / 2)

    def test_shape_mismatch(self):
        with pytest.raises(DimensionMismatch):
            partial_trace(np.eye(6) / 6, 2, 2)

    def test_other_party(self):
        assert Subsystem.A.other is Subsystem.B
        assert Subsystem("B").other is Subsystem.A

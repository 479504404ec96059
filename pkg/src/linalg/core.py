"""
Dense complex linear algebra for small bipartite systems.

Matrices are plain ``numpy`` arrays of dtype complex128 stored row-major.
Joint indices follow k = i * dim_b + j (subsystem A is the slow index);
every other module relies on this ordering.
"""
import logging
from enum import Enum
from typing import NamedTuple, Union

import numpy as np
from numpy.typing import ArrayLike, NDArray

from src.errors import DimensionMismatch, NoConvergence, NotHermitian, ParamOutOfRange

logger = logging.getLogger(__name__)

ComplexMatrix = NDArray[np.complex128]

HERMITIAN_TOL = 1e-9


class Subsystem(str, Enum):
    """Party of a bipartite system"""
    A = "A"
    B = "B"

    @property
    def other(self) -> "Subsystem":
        return Subsystem.B if self is Subsystem.A else Subsystem.A


class HermitianEigenDecomposition(NamedTuple):
    """Eigenvalues ascending; eigenvectors as unit-norm columns."""
    eigenvalues: NDArray[np.float64]
    eigenvectors: ComplexMatrix


def as_matrix(a: ArrayLike) -> ComplexMatrix:
    """
    Coerce input to a finite 2-D complex matrix.

    Raises:
        ParamOutOfRange: if the input is not 2-D or holds NaN/Inf
    """
    m = np.asarray(a, dtype=np.complex128)
    if m.ndim != 2:
        raise ParamOutOfRange(f"expected a 2-D matrix, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise ParamOutOfRange("matrix has non-finite entries")
    return m


def adjoint(a: ArrayLike) -> ComplexMatrix:
    return as_matrix(a).conj().T


def matmul(a: ArrayLike, b: ArrayLike) -> ComplexMatrix:
    a, b = as_matrix(a), as_matrix(b)
    if a.shape[1] != b.shape[0]:
        raise DimensionMismatch(f"cannot multiply {a.shape} by {b.shape}")
    return a @ b


def trace(a: ArrayLike) -> complex:
    a = as_matrix(a)
    if a.shape[0] != a.shape[1]:
        raise DimensionMismatch(f"trace of non-square matrix {a.shape}")
    return complex(np.trace(a))


def kron(a: ArrayLike, b: ArrayLike) -> ComplexMatrix:
    """Kronecker product; block (i, j) of the result is a[i, j] * b."""
    return np.kron(as_matrix(a), as_matrix(b))


def hermitian_part(a: ComplexMatrix) -> ComplexMatrix:
    return (a + a.conj().T) / 2


def hermitian_deviation(a: ComplexMatrix) -> float:
    """Max-norm of a - a^dagger."""
    return float(np.max(np.abs(a - a.conj().T))) if a.size else 0.0


def hermitian_eig(a: ArrayLike, tol: float = HERMITIAN_TOL) -> HermitianEigenDecomposition:
    """
    Eigendecomposition of a Hermitian matrix.

    The input is symmetrized as (a + a^dagger)/2 before decomposition, which
    removes round-off accumulated by the products that built it.

    Raises:
        DimensionMismatch: non-square input
        NotHermitian: ||a - a^dagger||_max above tol
        NoConvergence: the LAPACK driver failed to converge
    """
    a = as_matrix(a)
    if a.shape[0] != a.shape[1]:
        raise DimensionMismatch(f"eigendecomposition of non-square matrix {a.shape}")

    deviation = hermitian_deviation(a)
    if deviation > tol:
        raise NotHermitian(
            f"||A - A^dagger||_max = {deviation:.3e} exceeds {tol:.1e}",
            context={"shape": a.shape},
        )

    try:
        eigenvalues, eigenvectors = np.linalg.eigh(hermitian_part(a))
    except np.linalg.LinAlgError as e:
        raise NoConvergence(str(e)) from e

    return HermitianEigenDecomposition(eigenvalues=eigenvalues, eigenvectors=eigenvectors)


def eigvalsh(a: ArrayLike, tol: float = HERMITIAN_TOL) -> NDArray[np.float64]:
    """Ascending eigenvalues only; same checks as hermitian_eig."""
    a = as_matrix(a)
    if a.shape[0] != a.shape[1]:
        raise DimensionMismatch(f"eigenvalues of non-square matrix {a.shape}")
    deviation = hermitian_deviation(a)
    if deviation > tol:
        raise NotHermitian(f"||A - A^dagger||_max = {deviation:.3e} exceeds {tol:.1e}")
    try:
        return np.linalg.eigvalsh(hermitian_part(a))
    except np.linalg.LinAlgError as e:
        raise NoConvergence(str(e)) from e


def partial_trace(
    rho: ArrayLike,
    dim_a: int,
    dim_b: int,
    keep: Union[Subsystem, str] = Subsystem.A,
) -> ComplexMatrix:
    """
    Reduced matrix of one party.

    Args:
        rho: Joint matrix of side dim_a * dim_b
        dim_a: Dimension of subsystem A
        dim_b: Dimension of subsystem B
        keep: Subsystem to keep (the other is traced out)

    Returns:
        dim_a x dim_a matrix when keeping A, dim_b x dim_b when keeping B
    """
    rho = as_matrix(rho)
    side = dim_a * dim_b
    if rho.shape != (side, side):
        raise DimensionMismatch(
            f"matrix of shape {rho.shape} is not a {dim_a}x{dim_b} bipartite operator"
        )

    blocks = rho.reshape(dim_a, dim_b, dim_a, dim_b)
    if Subsystem(keep) is Subsystem.A:
        return np.einsum("ijkj->ik", blocks)
    return np.einsum("ijik->jk", blocks)


def is_unitary(u: ArrayLike, tol: float = 1e-10) -> bool:
    u = as_matrix(u)
    if u.shape[0] != u.shape[1]:
        return False
    return bool(np.max(np.abs(u.conj().T @ u - np.eye(u.shape[0]))) <= tol)

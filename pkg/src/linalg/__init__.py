"""
Dense linear algebra substrate
"""
from .core import (
    ComplexMatrix,
    HermitianEigenDecomposition,
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

__all__ = [
    "ComplexMatrix",
    "HermitianEigenDecomposition",
    "Subsystem",
    "adjoint",
    "as_matrix",
    "eigvalsh",
    "hermitian_eig",
    "is_unitary",
    "kron",
    "matmul",
    "partial_trace",
    "trace",
]

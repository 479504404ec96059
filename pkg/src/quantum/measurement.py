"""
Projective measurement bases and joint outcome statistics.

Observables are represented by their eigenbases only. The Fourier basis is
the canonical unbiased partner in every dimension, prime or not.
"""
import logging
from typing import Union

import numpy as np

from src.errors import DimensionMismatch, ParamOutOfRange
from src.linalg.core import ComplexMatrix, Subsystem, partial_trace
from src.models.measurement import (
    MUB_TOL,
    BasisQuadruple,
    JointDistribution,
    ProjectiveBasis,
    overlap_deviation,
)
from src.models.state import DensityMatrix
from src.quantum.states import haar_unitary

logger = logging.getLogger(__name__)

_SQRT_HALF = 1.0 / np.sqrt(2.0)

PAULI_VECTORS = {
    "X": np.array([[1, 1], [1, -1]], dtype=np.complex128) * _SQRT_HALF,
    "Y": np.array([[1, 1], [1j, -1j]], dtype=np.complex128) * _SQRT_HALF,
    "Z": np.eye(2, dtype=np.complex128),
}


def fourier_matrix(dim: int) -> ComplexMatrix:
    """F[j, k] = exp(2 pi i j k / dim) / sqrt(dim)"""
    j, k = np.meshgrid(np.arange(dim), np.arange(dim), indexing="ij")
    return np.exp(2j * np.pi * j * k / dim) / np.sqrt(dim)


def computational_basis(dim: int) -> ProjectiveBasis:
    if dim < 1:
        raise ParamOutOfRange(f"basis dimension must be positive, got {dim}")
    return ProjectiveBasis(vectors=np.eye(dim), label="computational")


def fourier_basis(dim: int) -> ProjectiveBasis:
    if dim < 1:
        raise ParamOutOfRange(f"basis dimension must be positive, got {dim}")
    return ProjectiveBasis(vectors=fourier_matrix(dim), label="fourier")


def conjugate_basis(b: ProjectiveBasis) -> ProjectiveBasis:
    """B F: unbiased with B because |<b_i| B f_k>|^2 = |F[i, k]|^2 = 1/dim."""
    return ProjectiveBasis(vectors=b.vectors @ fourier_matrix(b.dim), label=f"conj({b.label})")


def pauli_basis(axis: str) -> ProjectiveBasis:
    """Eigenbasis of sigma_X, sigma_Y or sigma_Z, +1 eigenvector first"""
    key = axis.upper()
    if key not in PAULI_VECTORS:
        raise ParamOutOfRange(f"unknown Pauli axis {axis!r}")
    return ProjectiveBasis(vectors=PAULI_VECTORS[key], label=f"sigma_{key.lower()}")


def random_basis(dim: int, rng: np.random.Generator) -> ProjectiveBasis:
    return ProjectiveBasis(vectors=haar_unitary(dim, rng), label="haar")


def is_mutually_unbiased(a: ProjectiveBasis, b: ProjectiveBasis, tol: float = MUB_TOL) -> bool:
    """True iff every |<a_i|b_j>|^2 is within tol of 1/dim"""
    return overlap_deviation(a, b) <= tol


def _check_dims(rho: DensityMatrix, basis_a: ProjectiveBasis, basis_b: ProjectiveBasis) -> None:
    if basis_a.dim != rho.dim_a or basis_b.dim != rho.dim_b:
        raise DimensionMismatch(
            f"bases {basis_a.dim}x{basis_b.dim} do not match state {rho.dim_a}x{rho.dim_b}"
        )


def joint_distribution(
    rho: DensityMatrix, basis_a: ProjectiveBasis, basis_b: ProjectiveBasis
) -> JointDistribution:
    """P(i, j) = <a_i (x) b_j| rho |a_i (x) b_j>"""
    _check_dims(rho, basis_a, basis_b)
    w = np.kron(basis_a.vectors, basis_b.vectors)
    # diag(W^dagger rho W) without forming the full product
    probabilities = np.einsum("ki,kl,li->i", w.conj(), rho.matrix, w).real
    return JointDistribution(p=probabilities.reshape(rho.dim_a, rho.dim_b))


def outcome_distribution(reduced: np.ndarray, basis: ProjectiveBasis) -> np.ndarray:
    """Single-party outcome probabilities <b_k| reduced |b_k>"""
    reduced = np.asarray(reduced, dtype=np.complex128)
    if reduced.shape != (basis.dim, basis.dim):
        raise DimensionMismatch(f"basis dim {basis.dim} does not match operator {reduced.shape}")
    probabilities = np.einsum("ki,kl,li->i", basis.vectors.conj(), reduced, basis.vectors).real
    return np.clip(probabilities, 0.0, None)


def reduced_state(rho: DensityMatrix, side: Union[Subsystem, str]) -> np.ndarray:
    return partial_trace(rho.matrix, rho.dim_a, rho.dim_b, keep=side)


def dephase(rho: DensityMatrix, basis_a: ProjectiveBasis, basis_b: ProjectiveBasis) -> DensityMatrix:
    """
    Post-measurement state sum_ij P(i,j) |ij><ij| written in the outcome labels.

    Its quantum mutual information equals the classical mutual information of
    the joint table.
    """
    table = joint_distribution(rho, basis_a, basis_b)
    return DensityMatrix(matrix=np.diag(table.p.reshape(-1)), dim_a=rho.dim_a, dim_b=rho.dim_b)


def is_minimally_disturbing(reduced: np.ndarray, basis: ProjectiveBasis, tol: float = 1e-9) -> bool:
    """True iff the reduced state is diagonal in the basis (commutes with the observable)"""
    reduced = np.asarray(reduced, dtype=np.complex128)
    rotated = basis.vectors.conj().T @ reduced @ basis.vectors
    off_diagonal = rotated - np.diag(np.diagonal(rotated))
    return bool(np.max(np.abs(off_diagonal)) <= tol)


def standard_quadruple(dim_a: int, dim_b: int) -> BasisQuadruple:
    """Computational basis as Q and its Fourier partner as R on both sides"""
    return BasisQuadruple(
        qa=computational_basis(dim_a),
        ra=fourier_basis(dim_a),
        qb=computational_basis(dim_b),
        rb=fourier_basis(dim_b),
        label="comp-fourier",
    )


def pauli_quadruple(q_axis: str, r_axis: str) -> BasisQuadruple:
    """Two-qubit quadruple measuring the same Pauli pair on both sides"""
    q, r = pauli_basis(q_axis), pauli_basis(r_axis)
    return BasisQuadruple(qa=q, ra=r, qb=q, rb=r, label=f"pauli-{q_axis.lower()}{r_axis.lower()}")


def random_quadruple(dim_a: int, dim_b: int, rng: np.random.Generator) -> BasisQuadruple:
    """Four independent Haar bases; generally not unbiased"""
    return BasisQuadruple(
        qa=random_basis(dim_a, rng),
        ra=random_basis(dim_a, rng),
        qb=random_basis(dim_b, rng),
        rb=random_basis(dim_b, rng),
        label="haar-random",
    )


def random_mub_quadruple(dim_a: int, dim_b: int, rng: np.random.Generator) -> BasisQuadruple:
    """Haar Q bases with their Fourier conjugates as R"""
    qa, qb = random_basis(dim_a, rng), random_basis(dim_b, rng)
    return BasisQuadruple(
        qa=qa, ra=conjugate_basis(qa), qb=qb, rb=conjugate_basis(qb), label="haar-mub"
    )


QUADRUPLE_CHOICES = ("comp-fourier", "pauli-xy", "pauli-zx")


def quadruple_for(choice: str, dim_a: int, dim_b: int) -> BasisQuadruple:
    """Resolve a named basis choice for a state of the given dimensions"""
    if choice == "comp-fourier":
        return standard_quadruple(dim_a, dim_b)
    if choice in ("pauli-xy", "pauli-zx"):
        if (dim_a, dim_b) != (2, 2):
            raise DimensionMismatch(f"{choice} needs a 2x2 state, got {dim_a}x{dim_b}")
        return pauli_quadruple(choice[-2], choice[-1])
    raise ParamOutOfRange(f"unknown basis choice {choice!r}; expected one of {QUADRUPLE_CHOICES}")


__all__ = [
    "fourier_matrix",
    "computational_basis",
    "fourier_basis",
    "conjugate_basis",
    "pauli_basis",
    "random_basis",
    "is_mutually_unbiased",
    "joint_distribution",
    "outcome_distribution",
    "reduced_state",
    "dephase",
    "is_minimally_disturbing",
    "standard_quadruple",
    "pauli_quadruple",
    "random_quadruple",
    "random_mub_quadruple",
    "QUADRUPLE_CHOICES",
    "quadruple_for",
]

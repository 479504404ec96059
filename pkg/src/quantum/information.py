"""
Classical and quantum entropies, in bits.
"""
import logging
from typing import Union

import numpy as np
from numpy.typing import ArrayLike

from src.errors import InternalConsistencyError, NotAState
from src.linalg.core import Subsystem, eigvalsh, partial_trace
from src.models.measurement import JointDistribution, ProbabilityVector
from src.models.state import DensityMatrix

logger = logging.getLogger(__name__)

EIGENVALUE_CLIP = 1e-9
CLASSICAL_CLAMP = 1e-12
QUANTUM_CLAMP = 1e-9
TRACE_TOL = 1e-9


def clip_tolerance(dim_a: int, dim_b: int) -> float:
    """
    Largest negative QMI that spectrum clipping alone can produce.

    Each zeroed marginal eigenvalue w < 1e-9 removes at most w log2(1/w) bits
    from S(A) or S(B); there are at most dim_a + dim_b of them.
    """
    return float(QUANTUM_CLAMP + (dim_a + dim_b) * EIGENVALUE_CLIP * np.log2(1.0 / EIGENVALUE_CLIP))


def entropy_of_spectrum(weights: ArrayLike) -> float:
    """-sum w log2 w over strictly positive weights (0 log 0 = 0)"""
    w = np.asarray(weights, dtype=np.float64)
    w = w[w > 0.0]
    return float(-np.sum(w * np.log2(w)))


def _clamp_nonnegative(value: float, tol: float, quantity: str) -> float:
    if value >= 0.0:
        return value
    if value >= -tol:
        return 0.0
    raise InternalConsistencyError(f"{quantity} = {value:.3e} is negative beyond {tol:.1e}")


def shannon_entropy(p: Union[ProbabilityVector, ArrayLike]) -> float:
    """Shannon entropy of a probability vector (validated, InvalidDistribution otherwise)"""
    vector = p if isinstance(p, ProbabilityVector) else ProbabilityVector(p=p)
    return entropy_of_spectrum(vector.p)


def marginal_entropies(j: JointDistribution) -> tuple:
    """(H(row outcomes), H(column outcomes))"""
    return entropy_of_spectrum(j.row_marginal()), entropy_of_spectrum(j.col_marginal())


def classical_mutual_information(j: JointDistribution) -> float:
    h_rows, h_cols = marginal_entropies(j)
    value = h_rows + h_cols - entropy_of_spectrum(j.p)
    return _clamp_nonnegative(value, CLASSICAL_CLAMP, "classical mutual information")


def classical_conditional_entropy(
    j: JointDistribution, conditioned_on: Union[Subsystem, str] = Subsystem.B
) -> float:
    """
    H(joint) - H(conditioning marginal).

    Conditioning on B gives H(row outcome | column outcome).
    """
    side = Subsystem(conditioned_on)
    marginal = j.col_marginal() if side is Subsystem.B else j.row_marginal()
    value = entropy_of_spectrum(j.p) - entropy_of_spectrum(marginal)
    return _clamp_nonnegative(value, CLASSICAL_CLAMP, "classical conditional entropy")


def clipped_spectrum(rho: Union[DensityMatrix, ArrayLike]) -> np.ndarray:
    """
    Eigenvalues with entries below 1e-9 zeroed and the rest renormalized.

    Raises:
        NotAState: trace off by more than 1e-9 or an eigenvalue below -1e-9
    """
    matrix = rho.matrix if isinstance(rho, DensityMatrix) else np.asarray(rho, dtype=np.complex128)
    eigenvalues = eigvalsh(matrix)
    total = float(eigenvalues.sum())
    if abs(total - 1.0) > TRACE_TOL:
        raise NotAState(f"trace {total:.12f} differs from 1")
    if eigenvalues[0] < -EIGENVALUE_CLIP:
        raise NotAState(f"negative eigenvalue {eigenvalues[0]:.3e}")
    kept = np.where(eigenvalues < EIGENVALUE_CLIP, 0.0, eigenvalues)
    return kept / kept.sum()


def von_neumann_entropy(rho: Union[DensityMatrix, ArrayLike]) -> float:
    """-tr(rho log2 rho) evaluated on the clipped spectrum"""
    return entropy_of_spectrum(clipped_spectrum(rho))


def subsystem_entropies(rho: DensityMatrix) -> tuple:
    """(S(A), S(B), S(A,B))"""
    s_a = von_neumann_entropy(partial_trace(rho.matrix, rho.dim_a, rho.dim_b, keep=Subsystem.A))
    s_b = von_neumann_entropy(partial_trace(rho.matrix, rho.dim_a, rho.dim_b, keep=Subsystem.B))
    return s_a, s_b, von_neumann_entropy(rho)


def mutual_information_from_entropies(
    s_a: float, s_b: float, s_ab: float, tol: float = QUANTUM_CLAMP
) -> float:
    """S(A) + S(B) - S(A,B); values in [-tol, 0) become 0"""
    return _clamp_nonnegative(s_a + s_b - s_ab, tol, "quantum mutual information")


def quantum_mutual_information(rho: DensityMatrix) -> float:
    """I(A:B) = S(A) + S(B) - S(A,B)"""
    return mutual_information_from_entropies(
        *subsystem_entropies(rho), tol=clip_tolerance(rho.dim_a, rho.dim_b)
    )


def conditional_quantum_entropy(
    rho: DensityMatrix, conditioned_on: Union[Subsystem, str] = Subsystem.B
) -> float:
    """S(A,B) - S(conditioning side); negative values certify entanglement and are kept"""
    side = Subsystem(conditioned_on)
    reduced = partial_trace(rho.matrix, rho.dim_a, rho.dim_b, keep=side)
    return von_neumann_entropy(rho) - von_neumann_entropy(reduced)


__all__ = [
    "entropy_of_spectrum",
    "shannon_entropy",
    "marginal_entropies",
    "classical_mutual_information",
    "classical_conditional_entropy",
    "clip_tolerance",
    "clipped_spectrum",
    "von_neumann_entropy",
    "subsystem_entropies",
    "mutual_information_from_entropies",
    "quantum_mutual_information",
    "conditional_quantum_entropy",
]

"""
State families and random state generation.

Every constructor returns a validated DensityMatrix. Random generators take
an explicit numpy Generator; there is no module-level RNG.
"""
import logging

import numpy as np
from scipy.linalg import expm

from src.errors import ParamOutOfRange
from src.linalg.core import ComplexMatrix
from src.models.state import BoundaryFamily, BoundaryMixtureSpec, DensityMatrix, WernerParams

logger = logging.getLogger(__name__)

# |up> is the +1 eigenstate of sigma_z and sits at index 0
UP, DOWN = 0, 1


def _projector(vector: np.ndarray) -> ComplexMatrix:
    return np.outer(vector, vector.conj())


def asymmetric_werner(params: WernerParams) -> DensityMatrix:
    """
    p |psi_AS><psi_AS| + (1 - p) I/4 with
    |psi_AS> = sqrt(eta) |up,down> - sqrt(1 - eta) |down,up>.
    """
    psi = np.zeros(4, dtype=np.complex128)
    psi[UP * 2 + DOWN] = np.sqrt(params.eta)
    psi[DOWN * 2 + UP] = -np.sqrt(1.0 - params.eta)
    rho = params.p * _projector(psi) + (1.0 - params.p) * np.eye(4) / 4.0
    return DensityMatrix(matrix=rho, dim_a=2, dim_b=2)


def werner(p: float, eta: float) -> DensityMatrix:
    return asymmetric_werner(WernerParams(p=p, eta=eta))


def _phi_plus_vector(n: int) -> np.ndarray:
    psi = np.zeros(n * n, dtype=np.complex128)
    psi[np.arange(n) * (n + 1)] = 1.0 / np.sqrt(n)
    return psi


def bell_phi_plus(n: int) -> DensityMatrix:
    """(1/sqrt n) sum_i |i,i> as a density matrix"""
    if n < 2:
        raise ParamOutOfRange(f"Bell state needs n >= 2, got {n}")
    return DensityMatrix(matrix=_projector(_phi_plus_vector(n)), dim_a=n, dim_b=n)


def mcm_state(n: int) -> DensityMatrix:
    """Maximally correlated mixed state (1/n) sum_i |i,i><i,i|"""
    if n < 2:
        raise ParamOutOfRange(f"maximally correlated state needs n >= 2, got {n}")
    diag = np.zeros(n * n)
    diag[np.arange(n) * (n + 1)] = 1.0 / n
    return DensityMatrix(matrix=np.diag(diag), dim_a=n, dim_b=n)


def maximally_mixed(m: int, n: int) -> DensityMatrix:
    if m < 1 or n < 1:
        raise ParamOutOfRange(f"maximally mixed state needs positive dims, got {m}x{n}")
    return DensityMatrix(matrix=np.eye(m * n) / (m * n), dim_a=m, dim_b=n)


def boundary_mixture(spec: BoundaryMixtureSpec) -> DensityMatrix:
    """lambda * first + (1 - lambda) * second for the named saturating family"""
    n = spec.n
    if spec.family is BoundaryFamily.BELL_WITH_MCM:
        first, second = bell_phi_plus(n), mcm_state(n)
    else:
        first, second = mcm_state(n), maximally_mixed(n, n)
    rho = spec.lam * first.matrix + (1.0 - spec.lam) * second.matrix
    return DensityMatrix(matrix=rho, dim_a=n, dim_b=n)


def product_state(rho_a: np.ndarray, rho_b: np.ndarray) -> DensityMatrix:
    rho_a = np.asarray(rho_a, dtype=np.complex128)
    rho_b = np.asarray(rho_b, dtype=np.complex128)
    return DensityMatrix(
        matrix=np.kron(rho_a, rho_b), dim_a=rho_a.shape[0], dim_b=rho_b.shape[0]
    )


def _complex_gaussian(rng: np.random.Generator, shape) -> np.ndarray:
    return (rng.standard_normal(shape) + 1j * rng.standard_normal(shape)) / np.sqrt(2.0)


def haar_unitary(dim: int, rng: np.random.Generator) -> ComplexMatrix:
    """
    Haar-distributed unitary.

    QR of a complex Ginibre matrix, then column k is multiplied by
    conj(R_kk)/|R_kk| to remove the phase freedom of the factorization.
    """
    if dim < 1:
        raise ParamOutOfRange(f"unitary dimension must be positive, got {dim}")
    z = _complex_gaussian(rng, (dim, dim))
    q, r = np.linalg.qr(z)
    diag = np.diagonal(r)
    phases = np.conj(diag) / np.abs(diag)
    return q * phases[np.newaxis, :]


def random_pure_state(dim_a: int, dim_b: int, rng: np.random.Generator) -> DensityMatrix:
    """|psi><psi| for a normalized vector of independent complex Gaussians"""
    if dim_a < 1 or dim_b < 1:
        raise ParamOutOfRange(f"dimensions must be positive, got {dim_a}x{dim_b}")
    psi = _complex_gaussian(rng, dim_a * dim_b)
    psi /= np.linalg.norm(psi)
    return DensityMatrix(matrix=_projector(psi), dim_a=dim_a, dim_b=dim_b)


def random_density_matrix(dim_a: int, dim_b: int, rng: np.random.Generator) -> DensityMatrix:
    """
    V diag(lambda) V^dagger with lambda uniform on the probability simplex and
    V Haar-distributed (simplex x Haar product measure).
    """
    if dim_a < 1 or dim_b < 1:
        raise ParamOutOfRange(f"dimensions must be positive, got {dim_a}x{dim_b}")
    side = dim_a * dim_b
    weights = rng.standard_exponential(side)
    spectrum = weights / weights.sum()
    v = haar_unitary(side, rng)
    rho = (v * spectrum[np.newaxis, :]) @ v.conj().T
    return DensityMatrix(matrix=rho, dim_a=dim_a, dim_b=dim_b)


def random_hermitian(dim: int, rng: np.random.Generator) -> ComplexMatrix:
    """GUE sample with entries scaled by 1/sqrt(dim)"""
    g = _complex_gaussian(rng, (dim, dim))
    return (g + g.conj().T) / (2.0 * np.sqrt(dim))


def perturb(rho: DensityMatrix, epsilon: float, rng: np.random.Generator) -> DensityMatrix:
    """
    U rho U^dagger with U = exp(i epsilon H) for a random Hermitian H.

    The spectrum is preserved; epsilon = 0 returns the input unchanged. H is
    drawn even when epsilon is zero so the stream position does not depend on
    the perturbation strength.
    """
    if not epsilon >= 0:
        raise ParamOutOfRange(f"perturbation strength must be >= 0, got {epsilon}")
    h = random_hermitian(rho.side, rng)
    if epsilon == 0:
        return rho
    u = expm(1j * epsilon * h)
    return DensityMatrix(matrix=u @ rho.matrix @ u.conj().T, dim_a=rho.dim_a, dim_b=rho.dim_b)


__all__ = [
    "asymmetric_werner",
    "werner",
    "bell_phi_plus",
    "mcm_state",
    "maximally_mixed",
    "boundary_mixture",
    "product_state",
    "haar_unitary",
    "random_pure_state",
    "random_density_matrix",
    "random_hermitian",
    "perturb",
]

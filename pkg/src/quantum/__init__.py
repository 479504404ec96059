"""
Quantum states, measurements, entropies and the CQC bounds
"""
from .bounds import (
    berta_classical_bound,
    berta_entanglement_witness,
    classify_gap,
    correlation_sum,
    entanglement_witness,
    evaluate,
    eve_information_bound,
    key_rate_lower_bound,
    residual_uncertainty,
    steering_witness,
    witness_is_sound,
)
from .information import (
    classical_conditional_entropy,
    classical_mutual_information,
    conditional_quantum_entropy,
    quantum_mutual_information,
    shannon_entropy,
    von_neumann_entropy,
)
from .measurement import (
    computational_basis,
    conjugate_basis,
    dephase,
    fourier_basis,
    is_mutually_unbiased,
    joint_distribution,
    pauli_basis,
    pauli_quadruple,
    quadruple_for,
    random_basis,
    standard_quadruple,
)
from .states import (
    asymmetric_werner,
    bell_phi_plus,
    boundary_mixture,
    haar_unitary,
    maximally_mixed,
    mcm_state,
    perturb,
    random_density_matrix,
    random_pure_state,
    werner,
)

__all__ = [
    "asymmetric_werner",
    "werner",
    "bell_phi_plus",
    "mcm_state",
    "maximally_mixed",
    "boundary_mixture",
    "haar_unitary",
    "random_pure_state",
    "random_density_matrix",
    "perturb",
    "computational_basis",
    "fourier_basis",
    "conjugate_basis",
    "pauli_basis",
    "random_basis",
    "is_mutually_unbiased",
    "joint_distribution",
    "dephase",
    "standard_quadruple",
    "pauli_quadruple",
    "quadruple_for",
    "shannon_entropy",
    "classical_mutual_information",
    "classical_conditional_entropy",
    "von_neumann_entropy",
    "quantum_mutual_information",
    "conditional_quantum_entropy",
    "classify_gap",
    "correlation_sum",
    "residual_uncertainty",
    "berta_classical_bound",
    "eve_information_bound",
    "key_rate_lower_bound",
    "entanglement_witness",
    "berta_entanglement_witness",
    "steering_witness",
    "evaluate",
    "witness_is_sound",
]

"""
Unit tests for classical and quantum entropies
"""
import numpy as np
import pytest

from src.errors import InvalidDistribution, NotAState
from src.linalg import Subsystem
from src.models.measurement import JointDistribution
from src.quantum.information import (
    classical_conditional_entropy,
    classical_mutual_information,
    clip_tolerance,
    clipped_spectrum,
    conditional_quantum_entropy,
    marginal_entropies,
    quantum_mutual_information,
    shannon_entropy,
    subsystem_entropies,
    von_neumann_entropy,
)
from src.quantum.measurement import joint_distribution, random_quadruple
from src.quantum.states import bell_phi_plus, mcm_state, random_density_matrix, random_pure_state


pytestmark = pytest.mark.unit


class TestShannon:
    """Classical entropies"""

    def test_binary_entropy(self):
        assert shannon_entropy([1 / 8, 7 / 8]) == pytest.approx(0.543564, abs=1e-6)

    @pytest.mark.parametrize("n", [2, 3, 5])
    def test_uniform(self, n):
        assert shannon_entropy(np.full(n, 1 / n)) == pytest.approx(np.log2(n))

    def test_zero_probabilities_ignored(self):
        assert shannon_entropy([1.0, 0.0, 0.0]) == 0.0

    def test_invalid(self):
        with pytest.raises(InvalidDistribution):
            shannon_entropy([0.7, 0.7])

    def test_xx_table_mutual_information(self):
        table = JointDistribution(p=[[1 / 16, 7 / 16], [7 / 16, 1 / 16]])
        assert classical_mutual_information(table) == pytest.approx(0.456436, abs=1e-6)

    def test_product_table_has_no_mutual_information(self):
        table = JointDistribution(p=np.outer([0.3, 0.7], [0.2, 0.5, 0.3]))
        assert classical_mutual_information(table) == pytest.approx(0.0, abs=1e-12)

    def test_conditional_entropy_of_correlated_table(self):
        table = JointDistribution(p=np.eye(3) / 3)
        assert classical_conditional_entropy(table) == pytest.approx(0.0, abs=1e-12)
        assert classical_conditional_entropy(table, conditioned_on=Subsystem.A) == pytest.approx(0.0, abs=1e-12)

    def test_conditional_entropy_direction(self):
        table = JointDistribution(p=[[0.25, 0.25], [0.0, 0.5]])
        assert classical_conditional_entropy(table, conditioned_on="A") == pytest.approx(0.5)
        assert classical_conditional_entropy(table, conditioned_on="B") == pytest.approx(0.688722, abs=1e-6)


class TestVonNeumann:
    """Quantum entropies"""

    def test_werner_entropy(self, werner_point):
        assert von_neumann_entropy(werner_point) == pytest.approx(0.993393, abs=1e-6)

    def test_werner_mutual_information(self, werner_point):
        assert quantum_mutual_information(werner_point) == pytest.approx(1.006607, abs=1e-6)

    def test_bell_mutual_information(self):
        assert quantum_mutual_information(bell_phi_plus(3)) == pytest.approx(2 * np.log2(3))

    def test_mcm_mutual_information(self):
        assert quantum_mutual_information(mcm_state(4)) == pytest.approx(2.0)

    def test_mixed_has_none(self, mixed2):
        assert quantum_mutual_information(mixed2) == pytest.approx(0.0, abs=1e-12)

    def test_conditional_entropy_negative_for_bell(self, bell2):
        assert conditional_quantum_entropy(bell2) == pytest.approx(-1.0)
        assert conditional_quantum_entropy(bell2, conditioned_on="A") == pytest.approx(-1.0)

    def test_conditional_entropy_mixed(self, mixed2):
        assert conditional_quantum_entropy(mixed2) == pytest.approx(1.0)

    def test_subsystem_entropies(self, bell2):
        s_a, s_b, s_ab = subsystem_entropies(bell2)
        assert (s_a, s_b) == (pytest.approx(1.0), pytest.approx(1.0))
        assert s_ab == pytest.approx(0.0, abs=1e-9)

    def test_clipped_spectrum_zeroes_tiny_values(self):
        spectrum = clipped_spectrum(np.diag([1 - 1e-10, 1e-10]))
        assert spectrum.tolist() == [0.0, 1.0]

    def test_clipped_spectrum_rejects_trace(self):
        with pytest.raises(NotAState):
            clipped_spectrum(np.eye(2))

    def test_clipped_spectrum_rejects_negative(self):
        with pytest.raises(NotAState):
            clipped_spectrum(np.diag([1.1, -0.1]))

    def test_near_product_state_clamps_to_zero(self, near_product):
        s_a, s_b, s_ab = subsystem_entropies(near_product)
        assert s_a + s_b - s_ab < -1e-9
        assert s_a + s_b - s_ab >= -clip_tolerance(2, 2)
        assert quantum_mutual_information(near_product) == 0.0

    @pytest.mark.parametrize("dims,expected", [((2, 2), 1.2e-7), ((4, 4), 2.4e-7)])
    def test_clip_tolerance_scales_with_sides(self, dims, expected):
        assert clip_tolerance(*dims) == pytest.approx(expected, rel=0.01)


class TestInvariants:
    """Orderings that hold for every state and table"""

    DIMS = [(2, 2), (2, 3), (3, 3), (2, 4)]

    def test_quantum_dominates_classical_for_any_bases(self, rng):
        for dims in self.DIMS:
            for _ in range(25):
                for rho in (random_density_matrix(*dims, rng), random_pure_state(*dims, rng)):
                    bases = random_quadruple(*dims, rng)
                    qmi = quantum_mutual_information(rho)
                    for basis_a, basis_b in ((bases.qa, bases.qb), (bases.ra, bases.rb)):
                        table = joint_distribution(rho, basis_a, basis_b)
                        assert classical_mutual_information(table) <= qmi + 1e-9

    def test_quantum_mutual_information_ceiling(self, rng):
        for dim_a, dim_b in self.DIMS:
            ceiling = 2 * min(np.log2(dim_a), np.log2(dim_b))
            for _ in range(25):
                assert quantum_mutual_information(random_density_matrix(dim_a, dim_b, rng)) <= ceiling + 1e-9
                assert quantum_mutual_information(random_pure_state(dim_a, dim_b, rng)) <= ceiling + 1e-9

    @pytest.mark.parametrize("shape", [(2, 2), (3, 4), (5, 2)])
    def test_classical_mutual_information_below_marginals(self, rng, shape):
        for _ in range(50):
            table = JointDistribution(p=rng.dirichlet(np.ones(shape[0] * shape[1])).reshape(shape))
            h_rows, h_cols = marginal_entropies(table)
            assert classical_mutual_information(table) <= min(h_rows, h_cols) + 1e-12

    def test_pure_state_marginal_entropies_agree(self, rng):
        for dims in self.DIMS:
            for _ in range(25):
                s_a, s_b, s_ab = subsystem_entropies(random_pure_state(*dims, rng))
                assert s_a == pytest.approx(s_b, abs=1e-9)
                assert s_ab == pytest.approx(0.0, abs=1e-9)

"""Проверки линейной алгебры состояний, частичного следа и разложения Шмидта."""
import math

import numpy as np
import pytest
from numpy.testing import assert_allclose

from src.quantum import (
    BipartiteState,
    DensityOperator,
    PureState,
    StateValidationError,
    Subsystem,
    UnitaryValidationError,
    apply_local_unitaries,
    coherence,
    composite_relabelling,
    entanglement_entropy,
    is_entangled,
    is_mixed_reduction,
    is_superposition,
    make_measurement_state,
    make_superposition,
    partial_trace,
    purity,
    reduced_states,
    schmidt,
    tensor_product,
)

H = 1 / math.sqrt(2)
X = np.array([[0, 1], [1, 0]], dtype=complex)


def random_bipartite(rng: np.random.Generator) -> BipartiteState:
    amps = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
    return BipartiteState(amps / np.linalg.norm(amps))


def random_unitary(rng: np.random.Generator) -> np.ndarray:
    z = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
    q, r = np.linalg.qr(z)
    return q @ np.diag(np.diag(r) / np.abs(np.diag(r)))


def trace_oracle(amps: np.ndarray, keep: str) -> np.ndarray:
    rho = np.zeros((2, 2), dtype=complex)
    for j in range(2):
        for jp in range(2):
            for k in range(2):
                if keep == "S":
                    rho[j, jp] += amps[j, k] * np.conj(amps[jp, k])
                else:
                    rho[j, jp] += amps[k, j] * np.conj(amps[k, jp])
    return rho


class TestSuperposition:
    def test_equal_weights(self) -> None:
        state = make_superposition(H, H)
        assert state.labels == ("s1", "s2")
        assert state.probability("s1") == pytest.approx(0.5, abs=1e-12)
        assert state.probability("s2") == pytest.approx(0.5, abs=1e-12)

    def test_basis_state(self) -> None:
        assert make_superposition(1, 0).probability("s1") == pytest.approx(1.0)

    def test_complex_amplitudes(self) -> None:
        state = make_superposition(0.6, 0.8j)
        assert_allclose(state.probabilities(), [0.36, 0.64], atol=1e-12)

    def test_small_deviation_renormalized(self) -> None:
        state = make_superposition(H * (1 + 1e-10), H)
        assert float(np.sum(state.probabilities())) == pytest.approx(1.0, abs=1e-14)

    def test_unnormalized_rejected(self) -> None:
        with pytest.raises(StateValidationError):
            make_superposition(1.0, 1.0)

    def test_non_finite_rejected(self) -> None:
        with pytest.raises(StateValidationError):
            make_superposition(float("nan"), 1.0)

    def test_duplicate_labels_rejected(self) -> None:
        with pytest.raises(StateValidationError):
            PureState(np.array([1.0, 0.0]), ("D1", "D1"))

    def test_basis_constructor(self) -> None:
        state = PureState.basis("D2", ("D1", "D2"))
        assert_allclose(state.amplitudes, [0, 1])


class TestMeasurementState:
    def test_diagonal_structure(self) -> None:
        ms = make_measurement_state(H, H)
        assert_allclose(ms.amps, [[H, 0], [0, H]], atol=1e-15)

    def test_single_term_is_product(self) -> None:
        ms = make_measurement_state(1, 0)
        assert schmidt(ms).rank == 1
        assert not is_entangled(ms)

    def test_singlet_like_rank_two(self) -> None:
        ms = make_measurement_state(H, -H)
        assert schmidt(ms).rank == 2
        assert is_entangled(ms)

    def test_rejects_unnormalized(self) -> None:
        with pytest.raises(StateValidationError):
            make_measurement_state(1, 1)

    def test_vector_order(self) -> None:
        ms = make_measurement_state(0.6, 0.8)
        assert_allclose(ms.as_vector(), [0.6, 0, 0, 0.8])
        assert_allclose(BipartiteState.from_vector(ms.as_vector()).amps, ms.amps)


class TestTensorProduct:
    def test_basis_product(self) -> None:
        state = tensor_product(PureState.basis("s1"), PureState.basis("a1", ("a1", "a2")))
        assert_allclose(state.amps, [[1, 0], [0, 0]])

    def test_uniform_product(self) -> None:
        state = tensor_product(make_superposition(H, H), make_superposition(H, H))
        assert_allclose(state.amps, np.full((2, 2), 0.5), atol=1e-15)

    def test_products_never_entangled(self) -> None:
        rng = np.random.default_rng(7)
        for _ in range(50):
            s = rng.normal(size=2) + 1j * rng.normal(size=2)
            a = rng.normal(size=2) + 1j * rng.normal(size=2)
            state = tensor_product(
                make_superposition(*(s / np.linalg.norm(s))),
                make_superposition(*(a / np.linalg.norm(a))),
            )
            assert not is_entangled(state)


class TestLocalUnitaries:
    def test_identity(self) -> None:
        ms = make_measurement_state(H, H)
        assert_allclose(apply_local_unitaries(ms, np.eye(2), np.eye(2)).amps, ms.amps)

    def test_swap_both_leaves_ms(self) -> None:
        ms = make_measurement_state(H, H)
        assert_allclose(apply_local_unitaries(ms, X, X).amps, ms.amps, atol=1e-15)

    def test_phase_on_s(self) -> None:
        phi = 0.7
        ms = make_measurement_state(H, H)
        shifted = apply_local_unitaries(ms, np.diag([np.exp(1j * phi), 1]), np.eye(2))
        assert shifted.amps[0, 0] == pytest.approx(H * np.exp(1j * phi), abs=1e-15)
        assert shifted.amps[1, 1] == pytest.approx(H, abs=1e-15)
        assert float(np.sum(shifted.probabilities())) == pytest.approx(1.0, abs=1e-12)

    def test_rejects_non_unitary(self) -> None:
        ms = make_measurement_state(H, H)
        with pytest.raises(UnitaryValidationError):
            apply_local_unitaries(ms, np.array([[1, 1], [0, 1]]), np.eye(2))

    def test_norm_and_schmidt_invariant(self) -> None:
        rng = np.random.default_rng(11)
        for _ in range(100):
            psi = random_bipartite(rng)
            evolved = psi
            for _ in range(5):
                evolved = apply_local_unitaries(evolved, random_unitary(rng), random_unitary(rng))
            assert float(np.sum(evolved.probabilities())) == pytest.approx(1.0, abs=1e-12)
            assert_allclose(schmidt(evolved).coefficients, schmidt(psi).coefficients, atol=1e-10)


class TestPartialTrace:
    def test_ms_maximally_mixed(self) -> None:
        rho = partial_trace(make_measurement_state(H, H), Subsystem.S)
        assert_allclose(rho.matrix, 0.5 * np.eye(2), atol=1e-15)
        assert purity(rho) == pytest.approx(0.5, abs=1e-12)

    def test_product_reduced_pure(self) -> None:
        rho = partial_trace(make_measurement_state(1, 0), Subsystem.A)
        assert_allclose(rho.matrix, [[1, 0], [0, 0]])
        assert purity(rho) == pytest.approx(1.0, abs=1e-12)

    def test_general_ms_diagonal(self) -> None:
        rho = partial_trace(make_measurement_state(0.6, 0.8j), "S")
        assert_allclose(rho.matrix, np.diag([0.36, 0.64]), atol=1e-15)
        assert_allclose(rho.diagonal(), [0.36, 0.64], atol=1e-15)
        assert coherence(rho) < 1e-15

    def test_brute_force_oracle(self) -> None:
        rng = np.random.default_rng(2024)
        for _ in range(1000):
            psi = random_bipartite(rng)
            assert_allclose(partial_trace(psi, Subsystem.S).matrix, trace_oracle(psi.amps, "S"), atol=1e-12)
            assert_allclose(partial_trace(psi, Subsystem.A).matrix, trace_oracle(psi.amps, "A"), atol=1e-12)

    def test_eigenvalues_are_squared_schmidt(self) -> None:
        rng = np.random.default_rng(5)
        for _ in range(200):
            psi = random_bipartite(rng)
            rho = partial_trace(psi, Subsystem.S)
            assert complex(np.trace(rho.matrix)).real == pytest.approx(1.0, abs=1e-12)
            assert_allclose(rho.eigenvalues(), np.square(schmidt(psi).coefficients), atol=1e-10)


class TestPurity:
    @pytest.mark.parametrize(
        "diagonal, expected",
        [((0.5, 0.5), 0.5), ((1.0, 0.0), 1.0), ((0.36, 0.64), 0.5392)],
    )
    def test_values(self, diagonal, expected) -> None:
        assert purity(DensityOperator(np.diag(diagonal))) == pytest.approx(expected, abs=1e-12)

    def test_rejects_bad_trace(self) -> None:
        with pytest.raises(StateValidationError):
            DensityOperator(np.diag([0.5, 0.6]))

    def test_rejects_non_hermitian(self) -> None:
        with pytest.raises(StateValidationError):
            DensityOperator(np.array([[0.5, 0.1], [0.0, 0.5]]))

    def test_pure_state_density(self) -> None:
        rho = DensityOperator.from_pure(make_superposition(H, H))
        assert purity(rho) == pytest.approx(1.0, abs=1e-12)
        assert is_superposition(rho)


class TestSchmidt:
    def test_ms(self) -> None:
        decomposition = schmidt(make_measurement_state(H, H))
        assert_allclose(decomposition.coefficients, [H, H], atol=1e-12)
        assert decomposition.rank == 2

    def test_basis_product(self) -> None:
        decomposition = schmidt(make_measurement_state(1, 0))
        assert_allclose(decomposition.coefficients, [1, 0], atol=1e-12)
        assert decomposition.rank == 1

    def test_uniform_product(self) -> None:
        decomposition = schmidt(BipartiteState(np.full((2, 2), 0.5)))
        assert_allclose(decomposition.coefficients, [1, 0], atol=1e-12)
        assert decomposition.rank == 1

    def test_svd_oracle(self) -> None:
        rng = np.random.default_rng(99)
        for _ in range(1000):
            psi = random_bipartite(rng)
            decomposition = schmidt(psi)
            singular = np.linalg.svd(psi.amps, compute_uv=False)
            assert_allclose(np.square(decomposition.coefficients), np.square(singular), atol=1e-12)
            assert sum(c * c for c in decomposition.coefficients) == pytest.approx(1.0, abs=1e-12)
            assert decomposition.coefficients[0] >= decomposition.coefficients[1]


class TestEntanglementAndMixedness:
    def test_ms_subsystems_are_mixtures(self) -> None:
        ms = make_measurement_state(H, H)
        rho_s, rho_a = reduced_states(ms)
        for rho in (rho_s, rho_a):
            assert coherence(rho) < 1e-12
            assert purity(rho) == pytest.approx(0.5, abs=1e-12)
            assert not is_superposition(rho)
        assert is_entangled(ms)
        assert entanglement_entropy(ms) == pytest.approx(1.0, abs=1e-12)

    def test_single_term_is_pure(self) -> None:
        ms = make_measurement_state(1, 0)
        assert purity(partial_trace(ms, Subsystem.S)) == pytest.approx(1.0, abs=1e-12)
        assert not is_entangled(ms)
        assert entanglement_entropy(ms) == pytest.approx(0.0, abs=1e-12)

    def test_composite_relabelling_is_plain_superposition(self) -> None:
        relabelled = composite_relabelling(H, H)
        assert relabelled.labels == ("b1", "b2")
        rho = DensityOperator.from_pure(relabelled)
        assert purity(rho) == pytest.approx(1.0, abs=1e-12)
        assert is_superposition(rho)
        assert is_entangled(make_measurement_state(H, H))

    def test_entanglement_iff_mixed(self) -> None:
        rng = np.random.default_rng(3)
        states = [random_bipartite(rng) for _ in range(200)]
        states += [make_measurement_state(1, 0), make_measurement_state(H, H)]
        for psi in states:
            assert is_entangled(psi) == is_mixed_reduction(psi)
            rho_s, rho_a = reduced_states(psi)
            assert purity(rho_s) == pytest.approx(purity(rho_a), abs=1e-10)

    @pytest.mark.parametrize("c2, entangled", [(1e-11, False), (1e-6, False), (1e-4, True), (0.1, True)])
    def test_weak_entanglement_agrees_with_mixedness(self, c2: float, entangled: bool) -> None:
        psi = make_measurement_state(math.sqrt(1.0 - c2 * c2), c2)
        assert schmidt(psi).coefficients[1] == pytest.approx(c2, rel=1e-9)
        assert is_entangled(psi) is entangled
        assert is_mixed_reduction(psi) is entangled

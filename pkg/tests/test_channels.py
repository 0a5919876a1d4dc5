"""Tests for Pauli vectors, Pauli transfer matrices and noise channels."""
import numpy as np
import pytest

from src.channels import (
    PauliTransferMatrix, PauliVector, average_gate_infidelity, choi_from_ptm, compose, cptp_check,
    density_to_pauli, dephasing, depolarizing, embed_local, entanglement_fidelity, maximally_mixed,
    operator_to_pauli, pauli_basis, pauli_flip, pauli_index, pauli_label, pauli_to_density,
    pauli_to_operator, product_state, ptm_from_choi, ptm_from_unitary, pure_state_pauli, tensor,
    zero_state,
)
from src.exceptions import BadParams, BadTargets, NotHermitian, NotUnitary, SizeMismatch
from src.models import gate_unitary, X90, CNOT

X = np.array([[0, 1], [1, 0]], dtype=complex)
Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
Zm = np.diag([1, -1]).astype(complex)


def make_random_unitary(d, seed=0):
    rng = np.random.default_rng(seed)
    A = rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))
    Q, R = np.linalg.qr(A)
    return Q * (np.diag(R) / np.abs(np.diag(R)))


def make_random_density(d, seed=0):
    rng = np.random.default_rng(seed)
    A = rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))
    rho = A @ A.conj().T
    return rho / np.trace(rho)


def apply_channel_to_density(p: PauliTransferMatrix, rho):
    v = density_to_pauli(rho)
    return pauli_to_density(PauliVector(v.n_qubits, p.matrix @ v.coefficients))


class TestPauliBasis:

    def test_orthonormal(self):
        B = pauli_basis(2).reshape(16, -1)
        assert np.allclose(B.conj() @ B.T, np.eye(16))

    def test_labels(self):
        assert pauli_label(0, 2) == 'II'
        assert pauli_label(1, 2) == 'IX'
        assert pauli_label(4, 2) == 'XI'
        assert pauli_index('ZY') == 14
        assert pauli_label(pauli_index('YXZ'), 3) == 'YXZ'

    def test_qubit_zero_most_significant(self):
        # basis element 'XI' is X on qubit 0
        B = pauli_basis(2)
        assert np.allclose(B[pauli_index('XI')] * 2, np.kron(X, np.eye(2)))


class TestPauliVector:

    def test_zero_state(self):
        v = zero_state(1)
        assert np.allclose(v.coefficients, np.array([1, 0, 0, 1]) / np.sqrt(2))
        assert np.isclose(v.trace, 1.0)

    def test_density_roundtrip(self):
        rho = make_random_density(4, seed=2)
        assert np.allclose(pauli_to_density(density_to_pauli(rho)), rho)

    def test_operator_roundtrip(self):
        rng = np.random.default_rng(1)
        op = rng.standard_normal((8, 8)) + 1j * rng.standard_normal((8, 8))
        assert np.allclose(pauli_to_operator(operator_to_pauli(op)), op)

    def test_product_state_matches_kron(self):
        a, b = make_random_density(2, 1), make_random_density(2, 2)
        v = product_state([density_to_pauli(a), density_to_pauli(b)])
        assert np.allclose(v.to_density(), np.kron(a, b))

    def test_maximally_mixed(self):
        assert np.allclose(maximally_mixed(2).to_density(), np.eye(4) / 4)

    def test_not_hermitian(self):
        with pytest.raises(NotHermitian):
            density_to_pauli(np.array([[1, 1], [0, 0]]))

    def test_wrong_size(self):
        with pytest.raises(SizeMismatch):
            PauliVector(2, np.zeros(4))


class TestPTMFromUnitary:

    def test_matches_conjugation(self):
        U = make_random_unitary(4, seed=5)
        rho = make_random_density(4, seed=6)
        out = apply_channel_to_density(ptm_from_unitary(U), rho)
        assert np.allclose(out, U @ rho @ U.conj().T)

    def test_unital_and_trace_preserving(self):
        p = ptm_from_unitary(make_random_unitary(2, seed=1))
        assert p.is_trace_preserving()
        assert p.is_unital()
        assert np.allclose(p.matrix @ p.matrix.T, np.eye(4))

    def test_cnot_maps_xi_to_xx(self):
        p = ptm_from_unitary(gate_unitary(CNOT))
        assert np.isclose(p.matrix[pauli_index('XX'), pauli_index('XI')], 1.0)

    def test_not_unitary(self):
        with pytest.raises(NotUnitary):
            ptm_from_unitary(np.ones((2, 2)))

    def test_global_phase_invariant(self):
        U = make_random_unitary(2, seed=3)
        assert ptm_from_unitary(U).allclose(ptm_from_unitary(1j * U))


class TestComposition:

    def test_compose_order(self):
        A, B = make_random_unitary(2, 1), make_random_unitary(2, 2)
        # b first, then a
        assert compose(ptm_from_unitary(A), ptm_from_unitary(B)).allclose(ptm_from_unitary(A @ B))
        assert (ptm_from_unitary(A) @ ptm_from_unitary(B)).allclose(ptm_from_unitary(A @ B))

    def test_tensor(self):
        A, B = make_random_unitary(2, 1), make_random_unitary(2, 2)
        assert tensor(ptm_from_unitary(A), ptm_from_unitary(B)).allclose(ptm_from_unitary(np.kron(A, B)))

    def test_embed_local(self):
        U = make_random_unitary(4, seed=7)
        full = embed_local(ptm_from_unitary(U), [2, 0], 3)
        # U acts on (qubit 2, qubit 0), qubit 2 as its most significant factor
        U4 = U.reshape(2, 2, 2, 2)
        expected = np.zeros((8, 8), dtype=complex)
        for o in range(8):
            for i in range(8):
                o0, o1, o2 = (o >> 2) & 1, (o >> 1) & 1, o & 1
                i0, i1, i2 = (i >> 2) & 1, (i >> 1) & 1, i & 1
                if o1 == i1:
                    expected[o, i] = U4[o2, o0, i2, i0]
        assert full.allclose(ptm_from_unitary(expected))

    def test_embed_bad_targets(self):
        with pytest.raises(BadTargets):
            embed_local(ptm_from_unitary(gate_unitary(X90)), [3], 2)

    def test_compose_size_mismatch(self):
        with pytest.raises(SizeMismatch):
            compose(PauliTransferMatrix.identity(1), PauliTransferMatrix.identity(2))


class TestChoi:

    def test_roundtrip(self):
        p = compose(depolarizing(0.1), ptm_from_unitary(make_random_unitary(2, 4)))
        assert ptm_from_choi(choi_from_ptm(p)).allclose(p)

    def test_identity_choi_is_bell_state(self):
        choi = choi_from_ptm(PauliTransferMatrix.identity(1))
        phi = np.array([1, 0, 0, 1]) / np.sqrt(2)
        assert np.allclose(choi, np.outer(phi, phi))

    def test_cptp_check_passes_for_channel(self):
        assert cptp_check(dephasing(0.2)).passed

    def test_cptp_check_fails_for_non_cp(self):
        bad = PauliTransferMatrix(1, np.diag([1.0, 1.0, 1.0, -1.0]))
        report = cptp_check(bad)
        assert not report.passed
        assert report.min_choi_eigenvalue < -0.1

    def test_cptp_check_fails_for_non_tp(self):
        bad = PauliTransferMatrix(1, np.diag([0.9, 1.0, 1.0, 1.0]))
        assert not cptp_check(bad)


class TestNoise:

    def test_dephasing_action(self):
        rho = make_random_density(2, 8)
        p = 0.3
        out = apply_channel_to_density(dephasing(p), rho)
        assert np.allclose(out, (1 - p) * rho + p * Zm @ rho @ Zm)

    def test_depolarizing_action(self):
        rho = make_random_density(2, 9)
        p = 0.4
        out = apply_channel_to_density(depolarizing(p), rho)
        assert np.allclose(out, (1 - p) * rho + p * np.eye(2) / 2)

    def test_two_qubit_flip(self):
        rho = make_random_density(4, 10)
        p = 0.2
        XX = np.kron(X, X)
        out = apply_channel_to_density(pauli_flip(p, 'XX'), rho)
        assert np.allclose(out, (1 - p) * rho + p * XX @ rho @ XX)

    def test_y_flip(self):
        rho = make_random_density(2, 11)
        out = apply_channel_to_density(pauli_flip(0.5, 'Y'), rho)
        assert np.allclose(out, 0.5 * rho + 0.5 * Y @ rho @ Y)

    def test_bad_probability(self):
        with pytest.raises(BadParams):
            depolarizing(1.5)


class TestFidelity:

    def test_perfect_gate(self):
        U = make_random_unitary(4, 12)
        assert np.isclose(entanglement_fidelity(ptm_from_unitary(U), U), 1.0)
        assert np.isclose(average_gate_infidelity(ptm_from_unitary(U), U), 0.0, atol=1e-12)

    def test_flip_fidelity(self):
        # a P flip with probability p has average gate fidelity 1 - 2p/3
        p = 0.06
        assert np.isclose(average_gate_infidelity(pauli_flip(p, 'X'), np.eye(2)), 2 * p / 3)

    def test_depolarizing_fidelity(self):
        p = 0.1
        assert np.isclose(average_gate_infidelity(depolarizing(p), np.eye(2)), p / 2)

    def test_pure_state_pauli(self):
        psi = np.array([1, 1j]) / np.sqrt(2)
        v = pure_state_pauli(psi)
        assert np.isclose(v.coefficients[pauli_index('Y')], 1 / np.sqrt(2))

"""Tests for the noisy Pauli-vector simulator, readout and fidelity estimators."""
import numpy as np
import pytest

from src.channels import (
    PauliVector, depolarizing, embed_local, pure_state_pauli, ptm_from_unitary, zero_state,
)
from src.circuits import ideal_unitary, parallelize
from src.devices import builtin_gst_ourense, builtin_ideal, restrict
from src.exceptions import BadMethod, BadQubit, DimensionMismatch, TooLarge
from src.models import Circuit, GateInstance, gate_unitary, Z, X90, CNOT
from src.simulator import (
    average_gate_fidelity, average_gate_fidelity_mc, expect_z, mixed_state_fidelity, process_ptm,
    run_noisy, run_noisy_batch, stabilizer_states, state_fidelity, state_infidelity,
)


def make_circuit():
    return Circuit(2, (
        GateInstance(Z, (0,), 0.4),
        GateInstance(X90, (0,)),
        GateInstance(CNOT, (0, 1)),
        GateInstance(X90, (1,)),
        GateInstance(Z, (1,), 1.1),
        GateInstance(X90, (0,)),
    ))


def make_gst_pair():
    return restrict(builtin_gst_ourense(), [0, 1])


def make_random_state(n, seed=0):
    rng = np.random.default_rng(seed)
    psi = rng.standard_normal(2 ** n) + 1j * rng.standard_normal(2 ** n)
    return psi / np.linalg.norm(psi)


class TestRunNoisy:

    def test_ideal_device_matches_unitary(self):
        c = make_circuit()
        psi = make_random_state(2, seed=1)
        d = builtin_ideal(2)
        out = run_noisy(parallelize(c, d.durations), d, pure_state_pauli(psi))
        expected = pure_state_pauli(ideal_unitary(c) @ psi)
        assert np.allclose(out.coefficients, expected.coefficients)

    def test_trace_preserved(self):
        d = make_gst_pair()
        out = run_noisy(parallelize(make_circuit(), d.durations), d, zero_state(2))
        assert out.trace == pytest.approx(1.0, abs=1e-3)

    def test_batch_matches_single(self):
        d = make_gst_pair()
        lc = parallelize(make_circuit(), d.durations)
        states = np.stack([pure_state_pauli(make_random_state(2, s)).coefficients for s in range(3)], axis=1)
        batch = run_noisy_batch(lc, d, states)
        for k in range(3):
            single = run_noisy(lc, d, PauliVector(2, states[:, k]))
            assert np.allclose(batch[:, k], single.coefficients)

    def test_matches_process_ptm(self):
        d = make_gst_pair()
        lc = parallelize(make_circuit(), d.durations)
        v = pure_state_pauli(make_random_state(2, seed=5))
        assert np.allclose(run_noisy(lc, d, v).coefficients, process_ptm(lc, d).matrix @ v.coefficients)

    def test_idle_qubits_get_idle_channel(self):
        d = make_gst_pair()
        lc = parallelize(Circuit(2, (GateInstance(X90, (0,)),)), d.durations)
        expected = embed_local(d.channels[X90], [0], 2) @ embed_local(d.idle_ptm, [1], 2)
        assert process_ptm(lc, d).allclose(expected)

    def test_dimension_mismatch(self):
        d = builtin_ideal(3)
        with pytest.raises(DimensionMismatch):
            run_noisy(parallelize(make_circuit()), d, zero_state(2))


class TestReadout:

    def test_noisy_prep_readout(self):
        d = restrict(builtin_gst_ourense(), [0])
        assert expect_z(d.prep_vector(), 0, d) == pytest.approx(0.98045, abs=1e-3)

    def test_ideal_readout(self):
        assert expect_z(zero_state(2), 1) == pytest.approx(1.0)
        d = builtin_gst_ourense()
        assert expect_z(zero_state(1), 0, d, ideal_readout=True) == pytest.approx(1.0)

    def test_reduced_qubit(self):
        # |0> on qubit 0, |1> on qubit 1
        v = pure_state_pauli(np.array([0, 1, 0, 0], dtype=complex))
        assert expect_z(v, 0) == pytest.approx(1.0)
        assert expect_z(v, 1) == pytest.approx(-1.0)

    def test_bad_qubit(self):
        with pytest.raises(BadQubit):
            expect_z(zero_state(2), 2)

    def test_state_fidelity(self):
        psi = make_random_state(2, seed=3)
        assert state_fidelity(pure_state_pauli(psi), psi) == pytest.approx(1.0)

    def test_mixed_state_fidelity(self):
        rho = np.diag([0.7, 0.3])
        assert mixed_state_fidelity(rho, rho) == pytest.approx(1.0)
        assert state_infidelity(np.diag([0.9903, 0.0097]), np.diag([1.0, 0.0])) == pytest.approx(0.0097)


class TestStabilizerStates:

    def test_counts(self):
        assert len(stabilizer_states(1)) == 6
        assert len(stabilizer_states(2)) == 60
        assert len(stabilizer_states(3)) == 1080

    def test_normalized(self):
        states = stabilizer_states(2)
        assert np.allclose(np.linalg.norm(states, axis=1), 1.0)

    def test_too_large(self):
        with pytest.raises(TooLarge):
            stabilizer_states(5)


class TestAverageGateFidelity:

    def test_depolarized_gate(self):
        # one depolarized X90 has average fidelity 1 - p/2
        p = 0.04
        d = builtin_ideal(1)
        d.channels[X90] = depolarizing(p) @ ptm_from_unitary(gate_unitary(X90))
        c = Circuit(1, (GateInstance(X90, (0,)),))
        for method in ('choi', 'pauli_sum', 'two_design'):
            assert average_gate_fidelity(c, d, gate_unitary(X90), method) == pytest.approx(1 - p / 2)

    def test_ideal_device_is_perfect(self):
        c = make_circuit()
        f = average_gate_fidelity(c, builtin_ideal(2), ideal_unitary(c))
        assert f == pytest.approx(1.0)

    def test_methods_agree(self):
        d = make_gst_pair()
        c = make_circuit()
        U = ideal_unitary(c)
        choi = average_gate_fidelity(c, d, U, 'choi')
        assert average_gate_fidelity(c, d, U, 'pauli_sum') == pytest.approx(choi, abs=1e-10)
        assert average_gate_fidelity(c, d, U, 'two_design') == pytest.approx(choi, abs=1e-10)
        mean, stderr = average_gate_fidelity_mc(c, d, U, samples=2000, seed=0)
        assert stderr > 0
        assert abs(mean - choi) < 5 * stderr + 1e-4

    def test_noise_lowers_fidelity(self):
        c = make_circuit()
        f = average_gate_fidelity(c, make_gst_pair(), ideal_unitary(c))
        assert 0.9 < f < 1.0

    def test_wrong_target_is_worse(self):
        c = make_circuit()
        d = make_gst_pair()
        assert average_gate_fidelity(c, d, np.eye(4)) < average_gate_fidelity(c, d, ideal_unitary(c))

    def test_bad_method(self):
        with pytest.raises(BadMethod):
            average_gate_fidelity(make_circuit(), builtin_ideal(2), np.eye(4), 'diamond')

    def test_two_design_limit(self):
        with pytest.raises(TooLarge):
            average_gate_fidelity(Circuit(5), builtin_ideal(5), np.eye(32), 'two_design')

    def test_register_mismatch(self):
        with pytest.raises(DimensionMismatch):
            average_gate_fidelity(make_circuit(), builtin_ideal(3), np.eye(4))

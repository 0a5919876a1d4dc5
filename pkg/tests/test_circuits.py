"""Tests for circuit validation, scheduling, simplification and the text format."""
import numpy as np
import pytest

from src.circuits import (
    apply_to_state, controlled_phase, controlled_g, euler_native, flatten, fredkin, g_gate,
    g_matrix, hadamard, ideal_unitary, inverse_permutation, parallelize, permute_qubits,
    read_circuit, simplify, toffoli, validate_circuit, write_circuit, zyz_angles,
)
from src.devices import builtin_gst_ourense, builtin_ideal
from src.exceptions import BadPermutation, BadQubitIndex, IllegalEdge, ParseError, UnknownGate
from src.models import Circuit, GateInstance, Z, X90, CNOT, RX
from src.utils import equal_up_to_phase


def make_random_circuit(n=3, length=20, seed=0):
    rng = np.random.default_rng(seed)
    gates = []
    for _ in range(length):
        r = rng.random()
        if r < 0.4:
            gates.append(GateInstance(Z, (int(rng.integers(n)),), float(rng.uniform(0, 2 * np.pi))))
        elif r < 0.7:
            gates.append(GateInstance(X90, (int(rng.integers(n)),)))
        else:
            a, b = rng.choice(n, size=2, replace=False)
            gates.append(GateInstance(CNOT, (int(a), int(b))))
    return Circuit(n, tuple(gates))


class TestValidateCircuit:

    def test_valid_circuit(self):
        c = Circuit(2, (GateInstance(X90, (0,)), GateInstance(CNOT, (0, 1))))
        assert validate_circuit(c, builtin_gst_ourense()) == []

    def test_illegal_edge(self):
        c = Circuit(3, (GateInstance(CNOT, (0, 2)),))
        errors = validate_circuit(c, builtin_gst_ourense())
        assert len(errors) == 1
        assert isinstance(errors[0], IllegalEdge)
        assert errors[0].index == 0

    def test_unknown_gate(self):
        c = Circuit(1, (GateInstance(RX, (0,), 0.3),))
        errors = validate_circuit(c, builtin_gst_ourense())
        assert isinstance(errors[0], UnknownGate)

    def test_qubit_out_of_range(self):
        c = Circuit(2, (GateInstance(X90, (3,)),))
        errors = validate_circuit(c, builtin_gst_ourense())
        assert isinstance(errors[0], BadQubitIndex)

    def test_collects_every_error(self):
        c = Circuit(3, (GateInstance(CNOT, (0, 2)), GateInstance(X90, (0,)), GateInstance(RX, (1,), 0.1)))
        errors = validate_circuit(c, builtin_gst_ourense())
        assert [e.index for e in errors] == [0, 2]


class TestPermutation:

    def test_relabel_moves_gates(self):
        c = Circuit(3, (GateInstance(CNOT, (0, 1)),))
        assert permute_qubits(c, (2, 0, 1))[0].qubits == (2, 0)

    def test_permuted_unitary(self):
        c = make_random_circuit(3, 15, seed=4)
        perm = (1, 2, 0)
        back = permute_qubits(permute_qubits(c, perm), inverse_permutation(perm))
        assert np.allclose(ideal_unitary(back), ideal_unitary(c))

    def test_bad_permutation(self):
        with pytest.raises(BadPermutation):
            permute_qubits(Circuit(2), (0, 0))


class TestIdealUnitary:

    def test_qubit_zero_most_significant(self):
        c = Circuit(2, (GateInstance(X90, (0,)), GateInstance(X90, (0,))))
        psi = apply_to_state(c, np.array([1, 0, 0, 0], dtype=complex))
        assert np.isclose(abs(psi[2]), 1.0)

    def test_state_matches_unitary(self):
        c = make_random_circuit(3, 25, seed=1)
        psi = np.zeros(8, dtype=complex)
        psi[0] = 1.0
        assert np.allclose(apply_to_state(c, psi), ideal_unitary(c)[:, 0])


class TestParallelize:

    def test_layer_example(self):
        # X on qubit 1 commutes through the CNOT target and joins the first layer
        c = Circuit(2, (
            GateInstance(X90, (0,)),
            GateInstance(X90, (0,)),
            GateInstance(CNOT, (0, 1)),
            GateInstance(X90, (1,)),
        ))
        lc = parallelize(c)
        assert lc.depth == 3
        assert GateInstance(X90, (1,)) in lc.layers[0].gates
        assert lc.layers[2].gates == (GateInstance(CNOT, (0, 1)),)
        assert lc.layers[1].slots[1].kind == 'idle'

    def test_z_is_decoration(self):
        c = Circuit(1, (GateInstance(X90, (0,)), GateInstance(Z, (0,), 0.5), GateInstance(X90, (0,))))
        lc = parallelize(c)
        assert lc.depth == 2
        assert lc.layers[1].slots[0].pre == (GateInstance(Z, (0,), 0.5),)

    def test_trailing_z(self):
        c = Circuit(1, (GateInstance(X90, (0,)), GateInstance(Z, (0,), 0.5)))
        lc = parallelize(c)
        assert lc.depth == 1
        assert lc.trailing[0] == (GateInstance(Z, (0,), 0.5),)

    def test_only_z_has_no_layers(self):
        lc = parallelize(Circuit(1, (GateInstance(Z, (0,), 0.5),)))
        assert lc.depth == 0
        assert len(lc.trailing_gates()) == 1

    def test_preserves_unitary(self):
        for seed in range(5):
            c = make_random_circuit(3, 30, seed=seed)
            assert np.allclose(ideal_unitary(flatten(parallelize(c))), ideal_unitary(c))

    def test_multi_cycle_gates(self):
        c = Circuit(2, (GateInstance(CNOT, (0, 1)), GateInstance(X90, (0,))))
        lc = parallelize(c, {Z: 0, X90: 1, CNOT: 2})
        assert lc.depth == 3
        assert lc.layers[1].slots[0].kind == 'continue'


class TestSimplify:

    def test_cnot_pair_cancels(self):
        c = Circuit(2, (GateInstance(CNOT, (0, 1)), GateInstance(CNOT, (0, 1))))
        assert len(simplify(c)) == 0

    def test_rotations_merge(self):
        c = Circuit(1, (GateInstance(Z, (0,), 0.25), GateInstance(Z, (0,), 0.5)))
        out = simplify(c)
        assert len(out) == 1
        assert np.isclose(out[0].angle, 0.75)

    def test_opposite_rotations_vanish(self):
        c = Circuit(1, (GateInstance(Z, (0,), 1.0), GateInstance(Z, (0,), -1.0)))
        assert len(simplify(c)) == 0

    def test_four_x90_removed(self):
        c = Circuit(1, tuple(GateInstance(X90, (0,)) for _ in range(5)))
        assert len(simplify(c)) == 1

    def test_blocked_by_other_gate(self):
        c = Circuit(2, (GateInstance(CNOT, (0, 1)), GateInstance(X90, (1,)), GateInstance(CNOT, (0, 1))))
        assert len(simplify(c)) == 3

    def test_preserves_unitary(self):
        for seed in range(5):
            c = make_random_circuit(3, 40, seed=seed)
            assert equal_up_to_phase(ideal_unitary(simplify(c)), ideal_unitary(c), atol=1e-9)

    def test_idempotent(self):
        c = simplify(make_random_circuit(3, 40, seed=9))
        assert simplify(c) == c


class TestNative:

    def test_hadamard(self):
        H = np.array([[1, 1], [1, -1]]) / np.sqrt(2)
        assert equal_up_to_phase(ideal_unitary(Circuit(1, tuple(hadamard(0)))), H)

    def test_euler_native(self):
        rng = np.random.default_rng(3)
        for _ in range(5):
            A = rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2))
            U, _ = np.linalg.qr(A)
            c = Circuit(1, tuple(euler_native(U, 0)))
            assert equal_up_to_phase(ideal_unitary(c), U, atol=1e-9)

    def test_zyz_roundtrip_identity(self):
        a, b, c = zyz_angles(np.eye(2))
        assert np.isclose(b, 0.0, atol=1e-9)

    def test_controlled_phase(self):
        theta = np.pi / 4
        U = ideal_unitary(Circuit(2, tuple(controlled_phase(0, 1, theta))))
        assert equal_up_to_phase(U, np.diag([1, 1, 1, np.exp(1j * theta)]))

    def test_g_gate_amplitudes(self):
        p = 0.25
        psi = apply_to_state(Circuit(1, tuple(g_gate(0, p))), np.array([1, 0], dtype=complex))
        assert np.allclose(np.abs(psi) ** 2, [p, 1 - p])
        assert np.allclose(np.abs(g_matrix(p)[:, 0]) ** 2, [p, 1 - p])

    def test_controlled_g(self):
        p = 1 / 3
        U = ideal_unitary(Circuit(2, tuple(controlled_g(0, 1, p))))
        # control off: identity on the target
        assert np.allclose(np.abs(U[:2, :2]), np.eye(2), atol=1e-9)
        assert np.allclose(np.abs(U[2:, 2]) ** 2, [p, 1 - p])

    def test_toffoli(self):
        expected = np.eye(8)
        expected[6:, 6:] = [[0, 1], [1, 0]]
        assert equal_up_to_phase(ideal_unitary(Circuit(3, tuple(toffoli(0, 1, 2)))), expected, atol=1e-9)

    def test_fredkin(self):
        expected = np.eye(8)
        expected[[5, 6]] = expected[[6, 5]]
        assert equal_up_to_phase(ideal_unitary(Circuit(3, tuple(fredkin(0, 1, 2)))), expected, atol=1e-9)


class TestTextFormat:

    def test_roundtrip(self):
        c = make_random_circuit(3, 12, seed=2)
        back = read_circuit(write_circuit(c, header="test"))
        assert back.n_qubits == 3
        assert [g.name for g in back] == [g.name for g in c]
        assert np.allclose(back.angles(), c.angles())

    def test_comments_and_default_size(self):
        c = read_circuit("# a comment\nX90 0\nCNOT 0 2  # trailing\nZ 1 0.5\n")
        assert c.n_qubits == 3
        assert len(c) == 3

    def test_unknown_gate(self):
        with pytest.raises(ParseError):
            read_circuit("H 0\n")

    def test_wrong_arguments(self):
        with pytest.raises(ParseError):
            read_circuit("Z 0\n")

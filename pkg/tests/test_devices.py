"""Tests for device models, the built-in devices and device files."""
import numpy as np
import pytest

from src.channels import PauliTransferMatrix, average_gate_infidelity, cptp_check, ptm_from_unitary
from src.devices import (
    DeviceModel, OURENSE_EDGES, PUBLISHED_METRICS, TrappedIonParams, builtin_gst_ourense,
    builtin_ideal, builtin_trapped_ion, channel_for, device_from_dict, device_to_dict,
    ideal_counterpart, load_device, resolve_device, restrict, save_device, validate_device,
)
from src.exceptions import BadParams, ConfigError, InvariantViolation, ParseError, UnknownGate
from src.models import GateInstance, gate_unitary, Z, X90, CNOT, IDLE, RX, XX
from src.simulator import state_infidelity


class TestGstOurense:

    def test_layout(self):
        d = builtin_gst_ourense()
        assert d.n_qubits == 5
        assert d.edges == OURENSE_EDGES
        assert d.is_edge(1, 0) and not d.is_edge(0, 2)

    def test_validates(self):
        validate_device(builtin_gst_ourense())

    def test_gate_infidelities_match_published(self):
        d = builtin_gst_ourense()
        for name in (IDLE, X90, CNOT):
            arity = d.alphabet[name].arity
            ch = channel_for(d, GateInstance(name, tuple(range(arity))))
            value = average_gate_infidelity(ch, gate_unitary(name))
            assert value == pytest.approx(PUBLISHED_METRICS[name], rel=0.05)

    def test_prep_infidelity(self):
        d = builtin_gst_ourense()
        value = state_infidelity(d.prep_density, np.diag([1.0, 0.0]))
        assert value == pytest.approx(9.7e-3, rel=0.01)

    def test_readout_effects_hermitian(self):
        E0, E1 = builtin_gst_ourense().readout_effects()
        assert np.allclose(E0, E0.conj().T)
        assert np.allclose(E0 + E1, np.eye(2), atol=1e-6)
        assert 1 - E1[1, 1].real == pytest.approx(0.0231)

    def test_z_is_ideal(self):
        d = builtin_gst_ourense()
        ch = channel_for(d, GateInstance(Z, (0,), 0.7))
        assert ch.allclose(ptm_from_unitary(gate_unitary(Z, 0.7)))

    def test_zero_angle_z_is_identity(self):
        ch = channel_for(builtin_gst_ourense(), GateInstance(Z, (0,), 0.0))
        assert ch.allclose(PauliTransferMatrix.identity(1))

    def test_durations(self):
        assert builtin_gst_ourense().durations == {Z: 0, X90: 1, CNOT: 1, IDLE: 1}


class TestTrappedIon:

    def test_validates(self):
        validate_device(builtin_trapped_ion())

    def test_fully_connected(self):
        d = builtin_trapped_ion(n=4)
        assert len(d.edges) == 6
        assert set(d.alphabet) == {'RX', 'RY', 'RZ', 'XX'}

    def test_channels_are_cptp(self):
        d = builtin_trapped_ion()
        for theta in (0.1, 1.0, np.pi):
            assert cptp_check(channel_for(d, GateInstance(RX, (0,), theta))).passed
            assert cptp_check(channel_for(d, GateInstance(XX, (0, 1), theta))).passed

    def test_noise_lowers_fidelity(self):
        d = builtin_trapped_ion()
        ch = channel_for(d, GateInstance(XX, (0, 1), 0.5))
        infidelity = average_gate_infidelity(ch, gate_unitary(XX, 0.5))
        assert 0 < infidelity < 0.01

    def test_zero_noise_is_ideal(self):
        d = builtin_trapped_ion(TrappedIonParams.zero())
        ch = channel_for(d, GateInstance(RX, (0,), 0.3))
        assert ch.allclose(ptm_from_unitary(gate_unitary(RX, 0.3)))

    def test_bad_params(self):
        with pytest.raises(BadParams):
            builtin_trapped_ion(TrappedIonParams(p_dep=2.0))


class TestIdealDevice:

    def test_noise_free(self):
        d = builtin_ideal(3)
        validate_device(d)
        assert d.idle_ptm.allclose(PauliTransferMatrix.identity(1))
        assert len(d.edges) == 3

    def test_counterpart_keeps_edges(self):
        d = ideal_counterpart(builtin_gst_ourense())
        assert d.edges == OURENSE_EDGES
        assert ideal_counterpart(builtin_trapped_ion()).alphabet.keys() == {'RX', 'RY', 'RZ', 'XX'}


class TestRestrict:

    def test_induced_edges(self):
        sub = restrict(builtin_gst_ourense(), [1, 3, 4])
        assert sub.n_qubits == 3
        assert sub.edges == ((0, 1), (1, 2))
        assert sub.name == 'gst-ourense[1,3,4]'

    def test_bad_qubits(self):
        with pytest.raises(InvariantViolation):
            restrict(builtin_gst_ourense(), [0, 0])
        with pytest.raises(InvariantViolation):
            restrict(builtin_gst_ourense(), [7])

    def test_legal_supports(self):
        sub = restrict(builtin_gst_ourense(), [0, 1, 2])
        assert set(sub.legal_supports(CNOT)) == {(0, 1), (1, 0), (1, 2), (2, 1)}
        assert sub.legal_supports(X90) == [(0,), (1,), (2,)]


class TestValidateDevice:

    def test_non_cptp_channel(self):
        d = builtin_ideal(2)
        d.channels[X90] = PauliTransferMatrix(1, np.diag([1.0, 1.0, 1.0, -1.0]))
        with pytest.raises(InvariantViolation):
            validate_device(d)

    def test_povm_not_complete(self):
        d = builtin_ideal(2)
        d.povm = (np.diag([1.0, 0.0]), np.diag([0.0, 0.9]))
        with pytest.raises(InvariantViolation):
            validate_device(d)

    def test_missing_channel(self):
        d = builtin_ideal(2)
        del d.channels[CNOT]
        with pytest.raises(InvariantViolation):
            validate_device(d)

    def test_unknown_gate_channel(self):
        with pytest.raises(UnknownGate):
            channel_for(builtin_ideal(1), GateInstance(RX, (0,), 0.1))


class TestDeviceFiles:

    def test_roundtrip_gst(self, tmp_path):
        d = builtin_gst_ourense()
        path = tmp_path / 'device.json'
        save_device(d, path)
        back = load_device(path)
        assert back.name == d.name and back.edges == d.edges
        assert back.channels[CNOT].allclose(d.channels[CNOT])
        assert np.allclose(back.povm[0], d.povm[0])
        assert back.tol_tp == d.tol_tp

    def test_roundtrip_constructor(self):
        d = builtin_trapped_ion()
        back = device_from_dict(device_to_dict(d))
        g = GateInstance(XX, (0, 2), 0.4)
        assert channel_for(back, g).allclose(channel_for(d, g))

    def test_malformed(self):
        with pytest.raises(ParseError):
            device_from_dict({'name': 'x', 'gates': []})

    def test_bad_basis(self):
        data = device_to_dict(builtin_ideal(1))
        data['idle_ptm']['basis'] = 'gell-mann'
        with pytest.raises(ParseError):
            device_from_dict(data)


class TestResolveDevice:

    def test_builtins(self):
        assert resolve_device('builtin:gst-ourense').name == 'gst-ourense'
        assert resolve_device('builtin:trapped-ion', 4).n_qubits == 4
        assert resolve_device('builtin:ideal').edges == OURENSE_EDGES

    def test_file(self, tmp_path):
        path = tmp_path / 'ideal.json'
        save_device(builtin_ideal(2), path)
        assert resolve_device(f'file:{path}').n_qubits == 2

    def test_unknown(self):
        with pytest.raises(ConfigError):
            resolve_device('builtin:nope')

import numpy as np
from scipy import linalg
from typing import Optional

from src.channels import PauliVector, operator_to_pauli, pure_state_pauli
from src.devices import DeviceModel
from src.exceptions import BadQubit

_Z = np.diag([1.0, -1.0]).astype(complex)


def reduced_qubit(coeffs: np.ndarray, n: int, qubit: int) -> np.ndarray:
    """Pauli vector (4 entries, plus any batch axes) of one qubit's reduced state."""
    if not 0 <= qubit < n:
        raise BadQubit(f"qubit {qubit} not in a {n}-qubit register")
    coeffs = np.asarray(coeffs)
    batch = coeffs.shape[1:]
    t = coeffs.reshape((4,) * n + batch)
    idx = [0] * n
    idx[qubit] = slice(None)
    # partial trace rescales by sqrt(2) per traced qubit
    return t[tuple(idx)] * np.sqrt(2.0 ** (n - 1))


def observable_coefficients(d: Optional[DeviceModel], ideal_readout: bool = False) -> np.ndarray:
    """Pauli coefficients of E0 - E1 (sigma_z for ideal readout)."""
    if d is None or ideal_readout:
        return operator_to_pauli(_Z).real
    E0, E1 = d.readout_effects()
    return operator_to_pauli(E0 - E1).real


def expect_z_batch(coeffs: np.ndarray, n: int, qubit: int, d: Optional[DeviceModel] = None,
                   ideal_readout: bool = False) -> np.ndarray:
    r = reduced_qubit(coeffs, n, qubit)
    o = observable_coefficients(d, ideal_readout)
    return np.tensordot(o, r, axes=(0, 0))


def expect_z(state: PauliVector, qubit: int, d: Optional[DeviceModel] = None,
             ideal_readout: bool = False) -> float:
    """Tr((E0 - E1) rho_qubit) with the device's noisy effects."""
    return float(expect_z_batch(state.coefficients, state.n_qubits, qubit, d, ideal_readout))


def state_fidelity(state: PauliVector, target: np.ndarray) -> float:
    """<psi| rho |psi> for a pure target."""
    w = pure_state_pauli(target)
    return float(np.dot(state.coefficients, w.coefficients))


def _psd_sqrt(m: np.ndarray) -> np.ndarray:
    vals, vecs = linalg.eigh((m + m.conj().T) / 2)
    vals = np.clip(vals, 0.0, None)
    return (vecs * np.sqrt(vals)) @ vecs.conj().T


def mixed_state_fidelity(rho: np.ndarray, sigma: np.ndarray) -> float:
    """(Tr sqrt(sqrt(rho) sigma sqrt(rho)))^2."""
    s = _psd_sqrt(np.asarray(rho, dtype=complex))
    inner = _psd_sqrt(s @ np.asarray(sigma, dtype=complex) @ s)
    return float(np.real(np.trace(inner)) ** 2)


def state_infidelity(rho: np.ndarray, sigma: np.ndarray) -> float:
    return 1.0 - mixed_state_fidelity(rho, sigma)

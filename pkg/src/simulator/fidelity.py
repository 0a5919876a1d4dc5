import numpy as np
from typing import Optional, Tuple, Union

from src.channels import PauliTransferMatrix, operator_to_pauli, ptm_from_unitary, y_parity
from src.devices import DeviceModel
from src.exceptions import BadMethod, DimensionMismatch, TooLarge
from src.models import Circuit, LayeredCircuit
from .designs import MAX_STABILIZER_QUBITS, haar_states, stabilizer_states
from .noisy import as_layered, evolve, run_noisy_batch

FIDELITY_METHODS = ('choi', 'pauli_sum', 'two_design', 'haar_mc')

# the Choi register doubles the qubit count
MAX_CHOI_QUBITS = 5


def _pure_state_columns(states: np.ndarray) -> np.ndarray:
    """Pauli vectors of |psi><psi| for each row, as columns."""
    return np.stack([operator_to_pauli(np.outer(s, s.conj())).real for s in states], axis=1)


def _target_ptm(target: np.ndarray, n: int,
                target_ptm: Optional[PauliTransferMatrix]) -> np.ndarray:
    if target_ptm is not None:
        return target_ptm.matrix
    target = np.asarray(target)
    if target.shape != (2 ** n, 2 ** n):
        raise DimensionMismatch(f"target must be {2 ** n}x{2 ** n}, got {target.shape}")
    return ptm_from_unitary(target).matrix


def entanglement_fidelity_choi(lc: LayeredCircuit, d: DeviceModel, target: np.ndarray,
                               target_ptm: Optional[PauliTransferMatrix] = None) -> float:
    """
    F_e from simulating (I x E) on the maximally entangled state.

    Reference qubits are 0..n-1, the circuit runs on n..2n-1. The input has
    Pauli entries s_a / d on the diagonal (a, a), where s_a = (-1)^{#Y in a};
    the target state (I x U)|phi> has entries s_a (R_U)_{ba} / d.
    """
    n = lc.n_qubits
    if n > MAX_CHOI_QUBITS:
        raise TooLarge(f"choi method supports at most {MAX_CHOI_QUBITS} qubits")
    R_U = _target_ptm(target, n, target_ptm)
    dim = 2 ** n
    s = y_parity(n)
    v = np.diag(s / dim)
    w = evolve(v.reshape((4,) * (2 * n)), lc, d, offset=n).reshape(dim * dim, dim * dim)
    return float(np.sum(w * R_U.T * s[:, None]) / dim)


def _nielsen_fidelity(lc: LayeredCircuit, d: DeviceModel, R_U: np.ndarray) -> float:
    # sum_j Tr(U P_j^dag U^dag E(P_j)) over the d^2 Paulis, each term from one simulated column
    n = lc.n_qubits
    dim = 2 ** n
    R_E = run_noisy_batch(lc, d, np.eye(4 ** n))
    terms = dim * np.einsum('ij,ij->j', R_U, R_E)
    return float((np.sum(terms) + dim ** 2) / (dim ** 2 * (dim + 1)))


def _ensemble_fidelities(lc: LayeredCircuit, d: DeviceModel, target: np.ndarray,
                         states: np.ndarray) -> np.ndarray:
    inputs = _pure_state_columns(states)
    ideal = _pure_state_columns(states @ np.asarray(target).T)
    outputs = run_noisy_batch(lc, d, inputs)
    return np.einsum('ij,ij->j', outputs, ideal)


def average_gate_fidelity_mc(circuit: Union[Circuit, LayeredCircuit], d: DeviceModel,
                             target: np.ndarray, samples: int = 1000,
                             seed: int = 0) -> Tuple[float, float]:
    """Haar Monte Carlo estimate and its standard error."""
    lc = as_layered(circuit, d)
    rng = np.random.default_rng(seed)
    states = haar_states(lc.n_qubits, samples, rng)
    f = _ensemble_fidelities(lc, d, target, states)
    stderr = float(np.std(f, ddof=1) / np.sqrt(len(f))) if len(f) > 1 else 0.0
    return float(np.mean(f)), stderr


def average_gate_fidelity(circuit: Union[Circuit, LayeredCircuit], d: DeviceModel,
                          target: np.ndarray, method: str = 'choi',
                          samples: int = 1000, seed: int = 0,
                          target_ptm: Optional[PauliTransferMatrix] = None) -> float:
    """Average fidelity of the noisy circuit against `target`; channel only, no SPAM."""
    if method not in FIDELITY_METHODS:
        raise BadMethod(f"unknown fidelity method {method!r}; use one of {FIDELITY_METHODS}")
    lc = as_layered(circuit, d)
    n = lc.n_qubits
    dim = 2 ** n
    if n != d.n_qubits:
        raise DimensionMismatch(f"circuit has {n} qubits, device {d.name} has {d.n_qubits}")

    if method == 'choi':
        fe = entanglement_fidelity_choi(lc, d, target, target_ptm)
        return (dim * fe + 1) / (dim + 1)
    if method == 'pauli_sum':
        if n > MAX_CHOI_QUBITS:
            raise TooLarge(f"pauli_sum method supports at most {MAX_CHOI_QUBITS} qubits")
        return _nielsen_fidelity(lc, d, _target_ptm(target, n, target_ptm))
    if method == 'two_design':
        if n > MAX_STABILIZER_QUBITS:
            raise TooLarge(f"two_design method supports at most {MAX_STABILIZER_QUBITS} qubits")
        return float(np.mean(_ensemble_fidelities(lc, d, target, stabilizer_states(n))))
    mean, _ = average_gate_fidelity_mc(lc, d, target, samples, seed)
    return mean

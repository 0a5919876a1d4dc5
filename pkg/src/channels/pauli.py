"""
Pauli-basis conventions.

Basis elements are ordered lexicographically over I, X, Y, Z per qubit with
qubit 0 the most significant digit, and normalized as P / sqrt(2^n) so that
they are orthonormal under the Hilbert-Schmidt inner product. A state's
Pauli vector has entries v_P = Tr(P rho) / sqrt(2^n); for a unit-trace state
the identity entry is 1 / sqrt(2^n).
"""
import itertools
import numpy as np
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from src.exceptions import NotHermitian, SizeMismatch
from src.utils.helpers import apply_local, n_qubits_for_dim

PAULI_LABELS = 'IXYZ'

PAULI_MATRICES = np.array([
    [[1, 0], [0, 1]],
    [[0, 1], [1, 0]],
    [[0, -1j], [1j, 0]],
    [[1, 0], [0, -1]],
], dtype=complex)

# M[a, 2i + j] = Pn_a[j, i]: maps a vectorized 1-qubit operator to its Pauli coefficients
_TO_PAULI = np.array([(P / np.sqrt(2)).T.reshape(-1) for P in PAULI_MATRICES])
# N[2i + j, a] = Pn_a[i, j]
_FROM_PAULI = np.array([(P / np.sqrt(2)).reshape(-1) for P in PAULI_MATRICES]).T


@lru_cache(maxsize=8)
def pauli_basis(n: int) -> np.ndarray:
    """Normalized basis as an array of shape (4^n, 2^n, 2^n)."""
    d = 2 ** n
    out = np.empty((4 ** n, d, d), dtype=complex)
    for k, idx in enumerate(itertools.product(range(4), repeat=n)):
        m = np.ones((1, 1), dtype=complex)
        for a in idx:
            m = np.kron(m, PAULI_MATRICES[a])
        out[k] = m / np.sqrt(d)
    out.setflags(write=False)
    return out


def pauli_label(index: int, n: int) -> str:
    digits = []
    for _ in range(n):
        digits.append(PAULI_LABELS[index % 4])
        index //= 4
    return ''.join(reversed(digits))


def pauli_index(label: str) -> int:
    idx = 0
    for ch in label:
        idx = 4 * idx + PAULI_LABELS.index(ch)
    return idx


def y_parity(n: int) -> np.ndarray:
    """(-1)^(number of Y factors) for each basis element, i.e. P^T = s_P P."""
    s = np.array([1.0, 1.0, -1.0, 1.0])
    out = np.ones(1)
    for _ in range(n):
        out = np.kron(out, s)
    return out


@dataclass(frozen=True)
class PauliVector:
    n_qubits: int
    coefficients: np.ndarray

    def __post_init__(self):
        coeffs = np.asarray(self.coefficients, dtype=float)
        if coeffs.shape != (4 ** self.n_qubits,):
            raise SizeMismatch(f"expected {4 ** self.n_qubits} coefficients, got {coeffs.shape}")
        object.__setattr__(self, 'coefficients', coeffs)

    @property
    def trace(self) -> float:
        return float(self.coefficients[0] * np.sqrt(2 ** self.n_qubits))

    def to_density(self) -> np.ndarray:
        return pauli_to_density(self)

    def tensor(self, other: 'PauliVector') -> 'PauliVector':
        return PauliVector(self.n_qubits + other.n_qubits,
                           np.kron(self.coefficients, other.coefficients))


def operator_to_pauli(op: np.ndarray) -> np.ndarray:
    """Complex Pauli coefficients Tr(Pn_k op) of any 2^n x 2^n operator."""
    op = np.asarray(op, dtype=complex)
    n = n_qubits_for_dim(op.shape[0])
    if n == 0:
        return op.reshape(1)
    # pair row/column index of each qubit into one axis of size 4
    t = op.reshape((2,) * (2 * n))
    order = [ax for q in range(n) for ax in (q, n + q)]
    t = t.transpose(order).reshape((4,) * n)
    for q in range(n):
        t = apply_local(t, _TO_PAULI, [q])
    return t.reshape(-1)


def pauli_to_operator(coeffs: np.ndarray) -> np.ndarray:
    coeffs = np.asarray(coeffs)
    n = n_qubits_for_dim(coeffs.shape[0], base=4)
    if n == 0:
        return coeffs.reshape(1, 1).astype(complex)
    t = coeffs.astype(complex).reshape((4,) * n)
    for q in range(n):
        t = apply_local(t, _FROM_PAULI, [q])
    t = t.reshape((2,) * (2 * n))
    # undo the (row_q, col_q) pairing
    order = list(range(0, 2 * n, 2)) + list(range(1, 2 * n, 2))
    return t.transpose(order).reshape(2 ** n, 2 ** n)


def density_to_pauli(rho: np.ndarray, atol: float = 1e-10) -> PauliVector:
    rho = np.asarray(rho, dtype=complex)
    if rho.ndim != 2 or rho.shape[0] != rho.shape[1]:
        raise SizeMismatch("density operator must be square")
    if not np.allclose(rho, rho.conj().T, atol=atol):
        raise NotHermitian("density operator is not Hermitian")
    coeffs = operator_to_pauli(rho)
    return PauliVector(n_qubits_for_dim(rho.shape[0]), coeffs.real)


def pauli_to_density(v: PauliVector) -> np.ndarray:
    return pauli_to_operator(v.coefficients)


def pure_state_pauli(psi: np.ndarray) -> PauliVector:
    psi = np.asarray(psi, dtype=complex).reshape(-1)
    return density_to_pauli(np.outer(psi, psi.conj()))


def product_state(vectors: Sequence[PauliVector]) -> PauliVector:
    """Pauli vector of a tensor product; the first factor is qubit 0."""
    coeffs = np.ones(1)
    n = 0
    for v in vectors:
        coeffs = np.kron(coeffs, v.coefficients)
        n += v.n_qubits
    return PauliVector(n, coeffs)


def zero_state(n: int) -> PauliVector:
    one = PauliVector(1, np.array([1.0, 0.0, 0.0, 1.0]) / np.sqrt(2))
    return product_state([one] * n)


def maximally_mixed(n: int) -> PauliVector:
    coeffs = np.zeros(4 ** n)
    coeffs[0] = 1 / np.sqrt(2 ** n)
    return PauliVector(n, coeffs)

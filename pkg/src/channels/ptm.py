import numpy as np
from dataclasses import dataclass
from scipy import linalg
from typing import Sequence

from src.exceptions import BadTargets, NotUnitary, SizeMismatch
from src.utils.helpers import apply_local, is_unitary, n_qubits_for_dim
from .pauli import pauli_basis


@dataclass(frozen=True)
class PauliTransferMatrix:
    """
    Real 4^n x 4^n channel matrix acting on column Pauli vectors, v' = R v.

    Column j is the image of basis element j, so R[:, 0] is the image of the
    identity and R[0, :] encodes trace preservation.
    """
    n_qubits: int
    matrix: np.ndarray

    def __post_init__(self):
        m = np.asarray(self.matrix, dtype=float)
        dim = 4 ** self.n_qubits
        if m.shape != (dim, dim):
            raise SizeMismatch(f"PTM on {self.n_qubits} qubits must be {dim}x{dim}, got {m.shape}")
        object.__setattr__(self, 'matrix', m)

    @classmethod
    def from_matrix(cls, matrix: np.ndarray) -> 'PauliTransferMatrix':
        matrix = np.asarray(matrix, dtype=float)
        return cls(n_qubits_for_dim(matrix.shape[0], base=4), matrix)

    @classmethod
    def identity(cls, n: int) -> 'PauliTransferMatrix':
        return cls(n, np.eye(4 ** n))

    @property
    def tp_residual(self) -> float:
        e1 = np.zeros(self.matrix.shape[1])
        e1[0] = 1.0
        return float(np.max(np.abs(self.matrix[0] - e1)))

    def is_trace_preserving(self, atol: float = 1e-9) -> bool:
        return self.tp_residual <= atol

    def is_unital(self, atol: float = 1e-9) -> bool:
        e1 = np.zeros(self.matrix.shape[0])
        e1[0] = 1.0
        return bool(np.max(np.abs(self.matrix[:, 0] - e1)) <= atol)

    def __matmul__(self, other: 'PauliTransferMatrix') -> 'PauliTransferMatrix':
        return compose(self, other)

    def allclose(self, other: 'PauliTransferMatrix', atol: float = 1e-10) -> bool:
        return self.n_qubits == other.n_qubits and np.allclose(self.matrix, other.matrix, atol=atol)


def ptm_from_unitary(U: np.ndarray, atol: float = 1e-10) -> PauliTransferMatrix:
    U = np.asarray(U, dtype=complex)
    if not is_unitary(U, atol=atol):
        raise NotUnitary("matrix is not unitary")
    n = n_qubits_for_dim(U.shape[0])
    B = pauli_basis(n)
    conj = U @ B @ U.conj().T
    # R_ij = Tr(Pn_i U Pn_j U^dag) = <vec Pn_i, vec(U Pn_j U^dag)>
    R = B.reshape(B.shape[0], -1).conj() @ conj.reshape(B.shape[0], -1).T
    return PauliTransferMatrix(n, R.real)


def compose(a: PauliTransferMatrix, b: PauliTransferMatrix) -> PauliTransferMatrix:
    """Apply b first, then a."""
    if a.n_qubits != b.n_qubits:
        raise SizeMismatch(f"cannot compose {a.n_qubits}- and {b.n_qubits}-qubit channels")
    return PauliTransferMatrix(a.n_qubits, a.matrix @ b.matrix)


def tensor(a: PauliTransferMatrix, b: PauliTransferMatrix) -> PauliTransferMatrix:
    """a on the leading qubits, b on the trailing ones."""
    return PauliTransferMatrix(a.n_qubits + b.n_qubits, np.kron(a.matrix, b.matrix))


def embed_local(p: PauliTransferMatrix, targets: Sequence[int], n: int) -> PauliTransferMatrix:
    """Full n-qubit PTM of a local channel acting on `targets` (in that order)."""
    targets = [int(t) for t in targets]
    if p.n_qubits not in (1, 2) or len(targets) != p.n_qubits:
        raise BadTargets(f"a {p.n_qubits}-qubit channel needs {p.n_qubits} targets, got {targets}")
    if len(set(targets)) != len(targets) or any(not 0 <= t < n for t in targets):
        raise BadTargets(f"targets {targets} invalid for {n} qubits")
    eye = np.eye(4 ** n).reshape((4,) * n + (4 ** n,))
    full = apply_local(eye, p.matrix, targets)
    return PauliTransferMatrix(n, full.reshape(4 ** n, 4 ** n))


def choi_from_ptm(p: PauliTransferMatrix) -> np.ndarray:
    """
    Choi state (I x E)(|phi><phi|), reference system first.

    rho = (1/d^2) sum_ij R_ij P_j^T (x) P_i with unnormalized Paulis.
    """
    d = 2 ** p.n_qubits
    B = pauli_basis(p.n_qubits)
    BT = B.transpose(0, 2, 1)
    rho = np.einsum('ij,jab,ice->acbe', p.matrix, BT, B) / d
    return rho.reshape(d * d, d * d)


def ptm_from_choi(choi: np.ndarray) -> PauliTransferMatrix:
    d = int(round(np.sqrt(choi.shape[0])))
    n = n_qubits_for_dim(d)
    B = pauli_basis(n)
    BT = B.transpose(0, 2, 1)
    rho4 = np.asarray(choi).reshape(d, d, d, d)
    # R_ij = Tr(rho (P_j^T (x) P_i))
    R = np.einsum('acbe,jba,iec->ij', rho4, BT, B) * d
    return PauliTransferMatrix(n, R.real)


@dataclass
class CPTPReport:
    tp_residual: float
    min_choi_eigenvalue: float
    tol_tp: float
    tol_cp: float

    @property
    def passed(self) -> bool:
        return self.tp_residual <= self.tol_tp and self.min_choi_eigenvalue >= -self.tol_cp

    def __bool__(self):
        return self.passed


def cptp_check(p: PauliTransferMatrix, tol_tp: float = 5e-5, tol_cp: float = 5e-3) -> CPTPReport:
    choi = choi_from_ptm(p)
    choi = (choi + choi.conj().T) / 2
    min_eig = float(linalg.eigvalsh(choi)[0])
    return CPTPReport(
        tp_residual=p.tp_residual,
        min_choi_eigenvalue=min_eig,
        tol_tp=tol_tp,
        tol_cp=tol_cp,
    )


def entanglement_fidelity(channel: PauliTransferMatrix, target: np.ndarray) -> float:
    """F_e(U^dag o E) = Tr(R_U^T R_E) / d^2."""
    R_U = ptm_from_unitary(target)
    if R_U.n_qubits != channel.n_qubits:
        raise SizeMismatch("target and channel act on different registers")
    d = 2 ** channel.n_qubits
    return float(np.sum(R_U.matrix * channel.matrix) / d ** 2)


def average_fidelity_from_entanglement(fe: float, d: int) -> float:
    return (d * fe + 1) / (d + 1)


def average_gate_infidelity(channel: PauliTransferMatrix, target: np.ndarray) -> float:
    d = 2 ** channel.n_qubits
    fe = entanglement_fidelity(channel, target)
    return 1.0 - average_fidelity_from_entanglement(fe, d)

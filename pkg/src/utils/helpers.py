import numpy as np
from typing import Sequence

TWO_PI = 2 * np.pi

# angles this close to 0 or 2*pi count as zero rotations
ANGLE_ATOL = 1e-12


def normalize_angle(theta: float) -> float:
    theta = float(np.mod(theta, TWO_PI))
    if theta > TWO_PI - ANGLE_ATOL:
        return 0.0
    return theta


def is_zero_angle(theta: float) -> bool:
    theta = normalize_angle(theta)
    return theta < ANGLE_ATOL


def n_qubits_for_dim(dim: int, base: int = 2) -> int:
    n = int(round(np.log(dim) / np.log(base))) if dim > 1 else 0
    if base ** n != dim:
        raise ValueError(f"dimension {dim} is not a power of {base}")
    return n


def is_unitary(U: np.ndarray, atol: float = 1e-10) -> bool:
    U = np.asarray(U)
    if U.ndim != 2 or U.shape[0] != U.shape[1]:
        return False
    return np.allclose(U @ U.conj().T, np.eye(U.shape[0]), atol=atol)


def apply_local(tensor: np.ndarray, op: np.ndarray, targets: Sequence[int]) -> np.ndarray:
    # op is (dim^k, dim^k), first target most significant; trailing batch axes are untouched
    k = len(targets)
    dim = tensor.shape[targets[0]]
    op = np.asarray(op).reshape((dim,) * (2 * k))
    out = np.tensordot(op, tensor, axes=(list(range(k, 2 * k)), list(targets)))
    return np.moveaxis(out, list(range(k)), list(targets))


def phase_aligned_distance(A: np.ndarray, B: np.ndarray) -> float:
    """Frobenius distance between A and B after removing the best global phase."""
    overlap = np.vdot(B, A)
    phase = overlap / abs(overlap) if abs(overlap) > 1e-15 else 1.0
    return float(np.linalg.norm(A - phase * B))


def equal_up_to_phase(A: np.ndarray, B: np.ndarray, atol: float = 1e-10) -> bool:
    return phase_aligned_distance(A, B) < atol

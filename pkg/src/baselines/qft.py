import numpy as np

from src.circuits import controlled_phase, hadamard
from src.exceptions import BadN
from src.models import Circuit


def qft_matrix(n: int) -> np.ndarray:
    """DFT on 2^n amplitudes: F[j, k] = exp(2 pi i j k / N) / sqrt(N)."""
    N = 2 ** n
    j, k = np.meshgrid(np.arange(N), np.arange(N), indexing='ij')
    return np.exp(2j * np.pi * j * k / N) / np.sqrt(N)


def bit_reversal(n: int) -> np.ndarray:
    """Permutation matrix reversing the qubit order of a basis index."""
    N = 2 ** n
    P = np.zeros((N, N))
    for i in range(N):
        rev = int(format(i, f'0{n}b')[::-1], 2) if n > 0 else 0
        P[rev, i] = 1.0
    return P


def qft_circuit(n: int = 3) -> Circuit:
    """Textbook QFT without the final swaps: bit_reversal(n) @ U = qft_matrix(n) up to phase."""
    if n < 1:
        raise BadN(f"QFT needs n >= 1, got {n}")
    gates = []
    for i in range(n):
        gates += hadamard(i)
        for j in range(i + 1, n):
            gates += controlled_phase(j, i, np.pi / 2 ** (j - i))
    return Circuit(n, tuple(gates))


def qft_target(n: int = 3) -> np.ndarray:
    """Ideal unitary of qft_circuit(n): the DFT followed by a qubit-order reversal."""
    return bit_reversal(n) @ qft_matrix(n)

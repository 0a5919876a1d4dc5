"""Finite state ensembles used for fidelity averaging and sampling."""
import numpy as np
from collections import deque
from functools import lru_cache

from src.exceptions import TooLarge
from src.utils.helpers import apply_local

MAX_STABILIZER_QUBITS = 4

_H = np.array([[1, 1], [1, -1]], dtype=complex) / np.sqrt(2)
_S = np.diag([1, 1j])
_CX = np.array([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]], dtype=complex)


def _canonical_key(psi: np.ndarray) -> tuple:
    lead = psi[np.argmax(np.abs(psi) > 1e-9)]
    psi = psi * (abs(lead) / lead)
    re = np.round(psi.real, 8) + 0.0
    im = np.round(psi.imag, 8) + 0.0
    return tuple(re) + tuple(im)


@lru_cache(maxsize=None)
def stabilizer_states(n: int) -> np.ndarray:
    """
    All n-qubit stabilizer states, one per row, with global phase fixed.

    They form an exact state 3-design, so averages of quantities quadratic in
    the state equal Haar averages. Found by closing |0...0> under H, S and
    CNOT; the counts are 6, 60, 1080, 36720 for n = 1..4.
    """
    if n > MAX_STABILIZER_QUBITS:
        raise TooLarge(f"stabilizer enumeration supports n <= {MAX_STABILIZER_QUBITS}")
    moves = []
    for q in range(n):
        moves.append((_H, (q,)))
        moves.append((_S, (q,)))
    for a in range(n):
        for b in range(n):
            if a != b:
                moves.append((_CX, (a, b)))

    start = np.zeros(2 ** n, dtype=complex)
    start[0] = 1.0
    seen = {_canonical_key(start): start}
    queue = deque([start])
    while queue:
        psi = queue.popleft()
        t = psi.reshape((2,) * n)
        for op, targets in moves:
            phi = apply_local(t, op, targets).reshape(-1)
            key = _canonical_key(phi)
            if key not in seen:
                seen[key] = phi
                queue.append(phi)
    states = np.array(list(seen.values()))
    states.setflags(write=False)
    return states


def haar_states(n: int, count: int, rng: np.random.Generator) -> np.ndarray:
    z = rng.standard_normal((count, 2 ** n)) + 1j * rng.standard_normal((count, 2 ** n))
    return z / np.linalg.norm(z, axis=1, keepdims=True)


def hs_mixed_states(n: int, count: int, rng: np.random.Generator) -> np.ndarray:
    """Hilbert-Schmidt random density matrices: partial traces of Haar states on 2n qubits."""
    d = 2 ** n
    psi = haar_states(2 * n, count, rng).reshape(count, d, d)
    return np.einsum('kia,kja->kij', psi, psi.conj())

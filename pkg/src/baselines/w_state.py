import numpy as np
from typing import Dict, List, Sequence, Tuple

from src.circuits import cnot, controlled_g, euler_native, g_alpha, g_gate, pauli_x, ry_matrix
from src.exceptions import BadN
from src.models import Circuit, GateInstance

W_SIZES = (4, 5)

Split = Tuple[int, int]

# (source, target) pairs. The first split starts from the excitation on
# qubit 0; every later tuple is one round of splits on disjoint pairs.
W_SPLITS: Dict[int, Tuple[Tuple[Split, ...], ...]] = {
    4: (((0, 1),), ((0, 2), (1, 3))),
    5: (((0, 1),), ((0, 2), (1, 3)), ((3, 4),)),
}


def w_state_vector(n: int) -> np.ndarray:
    """(|10..0> + |01..0> + ... + |0..01>) / sqrt(n), qubit 0 most significant."""
    if n < 1:
        raise BadN(f"W state needs n >= 1, got {n}")
    psi = np.zeros(2 ** n, dtype=complex)
    for q in range(n):
        psi[1 << (n - 1 - q)] = 1.0
    return psi / np.sqrt(n)


def split_probabilities(rounds: Sequence[Sequence[Split]], n: int) -> Dict[Split, float]:
    """Share of the excitation each split leaves on its source."""
    size = [1] * n
    probs = {}
    for pairs in reversed(rounds):
        for s, t in pairs:
            probs[(s, t)] = size[s] / (size[s] + size[t])
            size[s] += size[t]
    if sum(size[s] for s, _ in rounds[0]) != n:
        raise BadN(f"splits do not reach all {n} qubits")
    return probs


def _round(pairs: Sequence[Split], probs: Dict[Split, float]) -> List[GateInstance]:
    # controlled-G(s -> t) then CNOT(t -> s) per pair, interleaved stage by stage
    stages: List[List[GateInstance]] = [[], [], [], []]
    for s, t in pairs:
        alpha = g_alpha(probs[(s, t)])
        stages[0] += euler_native(ry_matrix(2 * alpha), t)
        stages[1] += cnot(s, t)
        stages[2] += euler_native(ry_matrix(-2 * alpha), t)
        stages[3] += cnot(t, s)
    return [g for stage in stages for g in stage]


def w_split_circuit(n: int, rounds: Sequence[Sequence[Split]]) -> Circuit:
    """
    W-state preparation from |0...0> along a split tree.

    Qubit 0 is flipped to |1>. Since it is known to be |1>, the first
    controlled-G reduces to G(p) on the target followed by CNOT(target, 0).
    """
    if len(rounds[0]) != 1 or rounds[0][0][0] != 0:
        raise BadN("the first round must be a single split from qubit 0")
    probs = split_probabilities(rounds, n)
    (s, t), = rounds[0]
    gates = pauli_x(0) + g_gate(t, probs[(s, t)]) + cnot(t, s)
    for pairs in rounds[1:]:
        gates += _round(pairs, probs)
    return Circuit(n, tuple(gates))


def _split(block: Sequence[int], first: bool) -> List[GateInstance]:
    # the excitation sits on block[0]; move weight (m - m//2)/m of it to the right half
    m = len(block)
    if m < 2:
        return []
    left, right = list(block[:m // 2]), list(block[m // 2:])
    source, target = block[0], right[0]
    p = len(left) / m
    if first:
        gates = g_gate(target, p)
    else:
        gates = controlled_g(source, target, p)
    gates += cnot(target, source)
    return gates + _split(left, False) + _split(right, False)


def w_tree_circuit(n: int) -> Circuit:
    """Balanced-tree W-state preparation from |0...0> for any n >= 1."""
    if n < 1:
        raise BadN(f"W state needs n >= 1, got {n}")
    qubits = list(range(n))
    if n == 1:
        return Circuit(1, tuple(pauli_x(0)))
    gates = pauli_x(0) + _split(qubits, True)
    return Circuit(n, tuple(gates))


def w_state_circuit(n: int) -> Circuit:
    """Textbook W_4 / W_5 preparation circuit in the native alphabet (not yet routed)."""
    if n not in W_SIZES:
        raise BadN(f"W-state baseline is defined for n in {W_SIZES}, got {n}")
    return w_split_circuit(n, W_SPLITS[n])

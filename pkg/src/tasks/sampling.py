import numpy as np
from typing import Optional

from src.exceptions import SampleSpecError
from src.models import TrainingPair, TrainingSet
from src.simulator import haar_states, hs_mixed_states, stabilizer_states

STATE_KINDS = ('haar_pure', 'hs_mixed', 'two_design')


def sample_states(kind: str, n_qubits: int, count: int = 1, seed: Optional[int] = 0) -> np.ndarray:
    """
    Random or design states.

    haar_pure returns state vectors (count, 2^n); hs_mixed returns density
    matrices (count, 2^n, 2^n); two_design returns every stabilizer state and
    ignores count and seed.
    """
    if kind == 'two_design':
        return np.array(stabilizer_states(n_qubits))
    if count < 1:
        raise SampleSpecError(f"count must be >= 1, got {count}")
    rng = np.random.default_rng(seed)
    if kind == 'haar_pure':
        return haar_states(n_qubits, count, rng)
    if kind == 'hs_mixed':
        return hs_mixed_states(n_qubits, count, rng)
    raise SampleSpecError(f"unknown state distribution {kind!r}; use one of {STATE_KINDS}")


def overlap(rho: np.ndarray, sigma: np.ndarray) -> float:
    return float(np.real(np.trace(rho @ sigma)))


def gen_overlap_training(n_pairs: int, rng_seed: Optional[int] = 0,
                         distribution: str = 'hs_mixed') -> TrainingSet:
    """Pairs of random 1-qubit states labelled with their exact overlap Tr(rho sigma)."""
    if n_pairs < 1:
        raise ValueError(f"n_pairs must be >= 1, got {n_pairs}")
    if distribution == 'hs_mixed':
        states = sample_states('hs_mixed', 1, 2 * n_pairs, rng_seed)
    elif distribution == 'haar_pure':
        psi = sample_states('haar_pure', 1, 2 * n_pairs, rng_seed)
        states = np.einsum('ki,kj->kij', psi, psi.conj())
    else:
        raise SampleSpecError(f"unknown overlap distribution {distribution!r}")

    pairs = []
    for rho, sigma in zip(states[0::2], states[1::2]):
        pairs.append(TrainingPair(inputs=(rho, sigma), label=overlap(rho, sigma)))
    return TrainingSet(pairs)

import itertools
import numpy as np

from src.exceptions import BadParams
from .pauli import PAULI_LABELS
from .ptm import PauliTransferMatrix


def _check_probability(p: float, name: str = 'p') -> None:
    if not 0.0 <= p <= 1.0:
        raise BadParams(f"{name} = {p} is not a probability")


def _anticommutes(a: str, b: str) -> bool:
    clashes = sum(1 for x, y in zip(a, b) if x != 'I' and y != 'I' and x != y)
    return clashes % 2 == 1


def pauli_flip(p: float, pauli: str) -> PauliTransferMatrix:
    """rho -> (1 - p) rho + p P rho P for a Pauli string P (one letter per qubit)."""
    _check_probability(p)
    n = len(pauli)
    diag = []
    for label in itertools.product(PAULI_LABELS, repeat=n):
        diag.append(1 - 2 * p if _anticommutes(''.join(label), pauli) else 1.0)
    return PauliTransferMatrix(n, np.diag(diag))


def dephasing(p: float) -> PauliTransferMatrix:
    return pauli_flip(p, 'Z')


def depolarizing(p: float) -> PauliTransferMatrix:
    """rho -> (1 - p) rho + p I/2."""
    _check_probability(p)
    return PauliTransferMatrix(1, np.diag([1.0, 1 - p, 1 - p, 1 - p]))

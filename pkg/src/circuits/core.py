import numpy as np
from typing import TYPE_CHECKING, List, Sequence, Tuple

from src.exceptions import (
    BadPermutation, BadQubitIndex, CircuitError, IllegalEdge, TooLarge, UnknownGate,
)
from src.models import Circuit
from src.utils.helpers import apply_local

if TYPE_CHECKING:
    from src.devices import DeviceModel

MAX_UNITARY_QUBITS = 10


def validate_circuit(c: Circuit, d: 'DeviceModel') -> List[CircuitError]:
    """Every problem found in `c` on device `d`; an empty list means the circuit is valid."""
    errors: List[CircuitError] = []
    if c.n_qubits > d.n_qubits:
        errors.append(BadQubitIndex(
            f"circuit uses {c.n_qubits} qubits, device has {d.n_qubits}"))
    for i, g in enumerate(c.gates):
        gdef = d.alphabet.get(g.name)
        if gdef is None:
            errors.append(UnknownGate(f"{g.name} is not in the device alphabet", index=i))
            continue
        if any(not 0 <= q < min(c.n_qubits, d.n_qubits) for q in g.qubits):
            errors.append(BadQubitIndex(f"qubits {g.qubits} out of range", index=i))
            continue
        if g.arity != gdef.arity:
            errors.append(BadQubitIndex(
                f"{g.name} acts on {gdef.arity} qubit(s), got {g.qubits}", index=i))
            continue
        if g.parametric != gdef.parametric:
            errors.append(UnknownGate(
                f"{g.name} {'needs' if gdef.parametric else 'takes no'} angle", index=i))
            continue
        if g.arity == 2 and not d.is_edge(*g.qubits):
            errors.append(IllegalEdge(f"{g.name}{g.qubits} is not on a device edge", index=i))
            continue
        if not gdef.allows(g.qubits):
            errors.append(IllegalEdge(f"{g.name} not allowed on {g.qubits}", index=i))
    return errors


def check_circuit(c: Circuit, d: 'DeviceModel') -> None:
    errors = validate_circuit(c, d)
    if errors:
        raise errors[0]


def _check_permutation(perm: Sequence[int], n: int) -> Tuple[int, ...]:
    try:
        perm = tuple(int(p) for p in perm)
    except (TypeError, ValueError):
        raise BadPermutation(f"not a permutation: {perm!r}")
    if sorted(perm) != list(range(n)):
        raise BadPermutation(f"{perm} is not a permutation of 0..{n - 1}")
    return perm


def permute_qubits(c: Circuit, perm: Sequence[int]) -> Circuit:
    """Relabel qubit q as perm[q]. The result may need re-routing."""
    perm = _check_permutation(perm, c.n_qubits)
    mapping = dict(enumerate(perm))
    return Circuit(c.n_qubits, tuple(g.relabel(mapping) for g in c.gates))


def inverse_permutation(perm: Sequence[int]) -> Tuple[int, ...]:
    perm = _check_permutation(perm, len(perm))
    inv = [0] * len(perm)
    for i, p in enumerate(perm):
        inv[p] = i
    return tuple(inv)


def ideal_unitary(c: Circuit) -> np.ndarray:
    """Product of ideal gate unitaries in sequence order, qubit 0 most significant."""
    n = c.n_qubits
    if n > MAX_UNITARY_QUBITS:
        raise TooLarge(f"ideal_unitary supports at most {MAX_UNITARY_QUBITS} qubits, got {n}")
    d = 2 ** n
    U = np.eye(d, dtype=complex).reshape((2,) * n + (d,))
    for g in c.gates:
        U = apply_local(U, g.unitary(), g.qubits)
    return U.reshape(d, d)


def apply_to_state(c: Circuit, psi: np.ndarray) -> np.ndarray:
    n = c.n_qubits
    t = np.asarray(psi, dtype=complex).reshape((2,) * n)
    for g in c.gates:
        t = apply_local(t, g.unitary(), g.qubits)
    return t.reshape(-1)

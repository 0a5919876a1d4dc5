import numpy as np
from typing import Union

from src.channels import PauliTransferMatrix, PauliVector, embed_local
from src.circuits import parallelize
from src.devices import DeviceModel, channel_for
from src.exceptions import DimensionMismatch
from src.models import Circuit, Layer, LayeredCircuit
from src.utils.helpers import apply_local


def as_layered(circuit: Union[Circuit, LayeredCircuit], d: DeviceModel) -> LayeredCircuit:
    if isinstance(circuit, LayeredCircuit):
        return circuit
    return parallelize(circuit, d.durations)


def evolve(tensor: np.ndarray, lc: LayeredCircuit, d: DeviceModel, offset: int = 0) -> np.ndarray:
    """
    Push a Pauli tensor through the noisy layers.

    `tensor` has one axis of size 4 per register qubit, optionally followed by
    batch axes; the circuit acts on register qubits offset .. offset+n-1.
    Within a layer the zero-duration decorations come first, then gates and
    idles. Continuation slots of multi-cycle gates apply nothing.
    """
    idle = d.idle_ptm.matrix
    for layer in lc.layers:
        for q, slot in enumerate(layer.slots):
            for g in slot.pre:
                tensor = apply_local(tensor, channel_for(d, g).matrix, [offset + q])
        for g in layer.gates:
            targets = [offset + q for q in g.qubits]
            tensor = apply_local(tensor, channel_for(d, g).matrix, targets)
        for q, slot in enumerate(layer.slots):
            if slot.kind == 'idle':
                tensor = apply_local(tensor, idle, [offset + q])
    for q, chain in enumerate(lc.trailing):
        for g in chain:
            tensor = apply_local(tensor, channel_for(d, g).matrix, [offset + q])
    return tensor


def run_noisy_batch(lc: LayeredCircuit, d: DeviceModel, states: np.ndarray) -> np.ndarray:
    """Columns of `states` are Pauli vectors; returns the evolved columns."""
    n = lc.n_qubits
    if n != d.n_qubits:
        raise DimensionMismatch(f"circuit has {n} qubits, device {d.name} has {d.n_qubits}")
    states = np.asarray(states, dtype=float)
    if states.shape[0] != 4 ** n:
        raise DimensionMismatch(f"states have dimension {states.shape[0]}, expected {4 ** n}")
    batch = states.shape[1:]
    t = evolve(states.reshape((4,) * n + batch), lc, d)
    return t.reshape((4 ** n,) + batch)


def run_noisy(lc: LayeredCircuit, d: DeviceModel, state: PauliVector) -> PauliVector:
    if state.n_qubits != lc.n_qubits:
        raise DimensionMismatch(
            f"input state has {state.n_qubits} qubits, circuit has {lc.n_qubits}")
    out = run_noisy_batch(lc, d, state.coefficients)
    return PauliVector(lc.n_qubits, out)


def layer_ptm(layer: Layer, d: DeviceModel, n: int) -> PauliTransferMatrix:
    """Full-register PTM of one layer, built by embedding every slot."""
    total = PauliTransferMatrix.identity(n)
    for q, slot in enumerate(layer.slots):
        for g in slot.pre:
            total = embed_local(channel_for(d, g), [q], n) @ total
    for g in layer.gates:
        total = embed_local(channel_for(d, g), g.qubits, n) @ total
    for q in layer.idle_qubits():
        total = embed_local(d.idle_ptm, [q], n) @ total
    return total


def process_ptm(lc: LayeredCircuit, d: DeviceModel) -> PauliTransferMatrix:
    """Full PTM of the whole noisy circuit; the reference path for small registers."""
    n = lc.n_qubits
    total = PauliTransferMatrix.identity(n)
    for layer in lc.layers:
        total = layer_ptm(layer, d, n) @ total
    for q, chain in enumerate(lc.trailing):
        for g in chain:
            total = embed_local(channel_for(d, g), [q], n) @ total
    return total

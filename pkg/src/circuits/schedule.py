"""ASAP layer scheduling and its inverse."""
from dataclasses import dataclass
from typing import Dict, List, Mapping, Optional

from src.models import (
    Circuit, GateInstance, Layer, LayeredCircuit, Slot, gates_commute,
    Z, X90, CNOT, IDLE, RX, RY, RZ, XX,
)

DEFAULT_DURATIONS: Dict[str, int] = {
    Z: 0,
    X90: 1,
    CNOT: 1,
    IDLE: 1,
    RX: 1,
    RY: 1,
    RZ: 1,
    XX: 1,
}


@dataclass
class _Placed:
    gate: GateInstance
    start: int
    duration: int

    @property
    def end(self) -> int:
        # first layer a non-commuting successor may use
        return self.start + self.duration


def parallelize(c: Circuit, durations: Optional[Mapping[str, int]] = None) -> LayeredCircuit:
    """
    Schedule every gate as early as the commutation rules allow.

    A timed gate goes into the earliest layer after its last non-commuting
    predecessor where all of its qubits are free, and occupies `duration`
    consecutive layers. Zero-duration gates are attached to the start of the
    layer right after their last non-commuting predecessor; past the last
    layer they go to the per-qubit trailing chains. Unused slots are idle.
    """
    durations = DEFAULT_DURATIONS if durations is None else durations
    n = c.n_qubits
    placed: List[_Placed] = []
    history: List[List[int]] = [[] for _ in range(n)]
    busy: List[set] = [set() for _ in range(n)]

    for g in c.gates:
        dur = int(durations.get(g.name, 1))
        if dur == 0 and g.arity != 1:
            raise ValueError(f"zero-duration gate {g.name} must act on one qubit")
        barrier = 0
        for q in g.qubits:
            for idx in history[q]:
                h = placed[idx]
                if h.end > barrier and not gates_commute(g, h.gate):
                    barrier = h.end
        start = barrier
        if dur > 0:
            while any(t in busy[q] for q in g.qubits for t in range(start, start + dur)):
                start += 1
            for q in g.qubits:
                busy[q].update(range(start, start + dur))
        placed.append(_Placed(g, start, dur))
        for q in g.qubits:
            history[q].append(len(placed) - 1)

    n_layers = max((p.end for p in placed if p.duration > 0), default=0)
    kinds = [['idle'] * n for _ in range(n_layers)]
    owners: List[List[Optional[GateInstance]]] = [[None] * n for _ in range(n_layers)]
    pre: List[List[List[GateInstance]]] = [[[] for _ in range(n)] for _ in range(n_layers)]
    starts: List[List[GateInstance]] = [[] for _ in range(n_layers)]
    trailing: List[List[GateInstance]] = [[] for _ in range(n)]

    for p in placed:
        if p.duration == 0:
            q = p.gate.qubits[0]
            if p.start < n_layers:
                pre[p.start][q].append(p.gate)
            else:
                trailing[q].append(p.gate)
            continue
        starts[p.start].append(p.gate)
        for t in range(p.start, p.end):
            for q in p.gate.qubits:
                kinds[t][q] = 'gate' if t == p.start else 'continue'
                owners[t][q] = p.gate

    layers = []
    for t in range(n_layers):
        slots = tuple(Slot(kinds[t][q], owners[t][q], tuple(pre[t][q])) for q in range(n))
        layers.append(Layer(slots=slots, gates=tuple(starts[t])))
    return LayeredCircuit(n, tuple(layers), tuple(tuple(chain) for chain in trailing))


def flatten(lc: LayeredCircuit) -> Circuit:
    """Layer by layer: decorations first, then the gates starting there; trailing chains last."""
    gates: List[GateInstance] = []
    for layer in lc.layers:
        gates.extend(layer.decorations())
        gates.extend(layer.gates)
    gates.extend(lc.trailing_gates())
    return Circuit(lc.n_qubits, tuple(gates))

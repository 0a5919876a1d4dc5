import numpy as np
from dataclasses import dataclass, field
from typing import Iterable, List, Optional, Sequence, Tuple

from .gate import GateInstance, TWO_QUBIT_GATES


@dataclass(frozen=True)
class Circuit:
    n_qubits: int
    gates: Tuple[GateInstance, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, 'gates', tuple(self.gates))

    def __len__(self):
        return len(self.gates)

    def __iter__(self):
        return iter(self.gates)

    def __getitem__(self, idx):
        return self.gates[idx]

    @property
    def parametric_indices(self) -> List[int]:
        return [i for i, g in enumerate(self.gates) if g.parametric]

    def angles(self) -> np.ndarray:
        return np.array([g.angle for g in self.gates if g.parametric], dtype=float)

    def with_angles(self, angles: Sequence[float]) -> 'Circuit':
        idx = self.parametric_indices
        if len(angles) != len(idx):
            raise ValueError(f"expected {len(idx)} angles, got {len(angles)}")
        gates = list(self.gates)
        for i, theta in zip(idx, angles):
            gates[i] = gates[i].with_angle(float(theta))
        return Circuit(self.n_qubits, tuple(gates))

    def inserted(self, position: int, seq: Iterable[GateInstance]) -> 'Circuit':
        gates = self.gates[:position] + tuple(seq) + self.gates[position:]
        return Circuit(self.n_qubits, gates)

    def removed(self, position: int) -> 'Circuit':
        return Circuit(self.n_qubits, self.gates[:position] + self.gates[position + 1:])

    def extended(self, seq: Iterable[GateInstance]) -> 'Circuit':
        return Circuit(self.n_qubits, self.gates + tuple(seq))

    def count(self, name: str) -> int:
        return sum(1 for g in self.gates if g.name == name)

    @property
    def two_qubit_count(self) -> int:
        return sum(1 for g in self.gates if g.name in TWO_QUBIT_GATES)


@dataclass(frozen=True)
class Slot:
    """
    What one qubit does during one layer.

    kind is 'gate' (a gate starts here), 'continue' (a multi-cycle gate started
    in an earlier layer) or 'idle'. `pre` holds zero-duration gates applied on
    this qubit at the start of the layer.
    """
    kind: str
    gate: Optional[GateInstance] = None
    pre: Tuple[GateInstance, ...] = ()


@dataclass(frozen=True)
class Layer:
    slots: Tuple[Slot, ...]
    # gates starting in this layer, in source order
    gates: Tuple[GateInstance, ...] = ()

    def idle_qubits(self) -> List[int]:
        return [q for q, s in enumerate(self.slots) if s.kind == 'idle']

    def decorations(self) -> List[GateInstance]:
        out = []
        for s in self.slots:
            out.extend(s.pre)
        return out


@dataclass(frozen=True)
class LayeredCircuit:
    n_qubits: int
    layers: Tuple[Layer, ...] = ()
    # zero-duration gates scheduled after the last layer, per qubit
    trailing: Tuple[Tuple[GateInstance, ...], ...] = field(default=())

    def __len__(self):
        return len(self.layers)

    @property
    def depth(self) -> int:
        return len(self.layers)

    def trailing_gates(self) -> List[GateInstance]:
        out = []
        for chain in self.trailing:
            out.extend(chain)
        return out

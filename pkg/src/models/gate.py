import numpy as np
from dataclasses import dataclass, field, replace
from typing import Dict, Mapping, Optional, Tuple

from src.exceptions import BadQubitIndex, UnknownGate
from src.utils.helpers import normalize_angle

# superconducting (GST) alphabet
Z = 'Z'
X90 = 'X90'
CNOT = 'CNOT'
IDLE = 'I'

# trapped-ion alphabet
RX = 'RX'
RY = 'RY'
RZ = 'RZ'
XX = 'XX'

PARAMETRIC_GATES = frozenset({Z, RX, RY, RZ, XX})
TWO_QUBIT_GATES = frozenset({CNOT, XX})

# rotations that add their angles when adjacent on the same qubits
MERGEABLE_ROTATIONS = frozenset({Z, RX, RY, RZ, XX})

_I2 = np.eye(2, dtype=complex)
_PX = np.array([[0, 1], [1, 0]], dtype=complex)
_PY = np.array([[0, -1j], [1j, 0]], dtype=complex)
_PZ = np.array([[1, 0], [0, -1]], dtype=complex)


@dataclass(frozen=True)
class GateDef:
    name: str
    arity: int
    parametric: bool
    duration: int = 1
    # allowed qubit tuples; None means any qubit (1q) or any device edge (2q)
    supports: Optional[Tuple[Tuple[int, ...], ...]] = None

    def __post_init__(self):
        if self.arity not in (1, 2):
            raise ValueError(f"{self.name}: arity must be 1 or 2")
        if self.duration < 0:
            raise ValueError(f"{self.name}: duration must be >= 0")

    def allows(self, qubits: Tuple[int, ...]) -> bool:
        if self.supports is None:
            return True
        return tuple(qubits) in self.supports

    def to_dict(self) -> dict:
        d = {
            'name': self.name,
            'arity': self.arity,
            'parametric': self.parametric,
            'duration': self.duration,
        }
        if self.supports is not None:
            d['supports'] = [list(s) for s in self.supports]
        return d

    @classmethod
    def from_dict(cls, data: dict) -> 'GateDef':
        supports = data.get('supports')
        return cls(
            name=data['name'],
            arity=int(data['arity']),
            parametric=bool(data['parametric']),
            duration=int(data.get('duration', 1)),
            supports=tuple(tuple(s) for s in supports) if supports is not None else None,
        )


@dataclass(frozen=True)
class GateInstance:
    name: str
    qubits: Tuple[int, ...]
    angle: Optional[float] = None

    def __post_init__(self):
        qubits = tuple(int(q) for q in self.qubits)
        if len(set(qubits)) != len(qubits):
            raise BadQubitIndex(f"{self.name} acts twice on the same qubit {qubits}")
        object.__setattr__(self, 'qubits', qubits)
        if self.angle is not None:
            object.__setattr__(self, 'angle', normalize_angle(self.angle))

    @property
    def arity(self) -> int:
        return len(self.qubits)

    @property
    def parametric(self) -> bool:
        return self.angle is not None

    def with_angle(self, theta: float) -> 'GateInstance':
        return replace(self, angle=theta)

    def relabel(self, mapping: Mapping[int, int]) -> 'GateInstance':
        return replace(self, qubits=tuple(mapping[q] for q in self.qubits))

    def unitary(self) -> np.ndarray:
        return gate_unitary(self.name, self.angle)

    def __str__(self):
        parts = [self.name] + [str(q) for q in self.qubits]
        if self.angle is not None:
            parts.append(repr(self.angle))
        return ' '.join(parts)


def _rotation(P: np.ndarray, theta: float) -> np.ndarray:
    # exp(-i theta P) for a Pauli P
    return np.cos(theta) * np.eye(P.shape[0]) - 1j * np.sin(theta) * P


def gate_unitary(name: str, angle: Optional[float] = None) -> np.ndarray:
    """
    Ideal unitary of a native gate.

    Z(t) = diag(1, e^{it}), X90 = exp(-i pi X / 4), CNOT controlled on its first
    qubit, RP(t) = exp(-i t P) and XX(t) = exp(+i t X(x)X).
    """
    if name == IDLE:
        return _I2.copy()
    if name == X90:
        return _rotation(_PX, np.pi / 4)
    if name == CNOT:
        U = np.eye(4, dtype=complex)
        U[2:, 2:] = _PX
        return U
    if name in PARAMETRIC_GATES and angle is None:
        raise UnknownGate(f"{name} needs an angle")
    if name == Z:
        return np.diag([1.0, np.exp(1j * angle)])
    if name == RX:
        return _rotation(_PX, angle)
    if name == RY:
        return _rotation(_PY, angle)
    if name == RZ:
        return _rotation(_PZ, angle)
    if name == XX:
        return _rotation(np.kron(_PX, _PX), -angle)
    raise UnknownGate(f"no ideal unitary for gate {name!r}")


# Per-qubit action class used by the commutation rules: 'z' means diagonal in
# the computational basis on that qubit, 'x' diagonal in the X basis.
_ROLES: Dict[str, Tuple[Optional[str], ...]] = {
    Z: ('z',),
    RZ: ('z',),
    X90: ('x',),
    RX: ('x',),
    CNOT: ('z', 'x'),
    XX: ('x', 'x'),
}


def qubit_role(g: GateInstance, qubit: int) -> Optional[str]:
    roles = _ROLES.get(g.name)
    if roles is None:
        return None
    return roles[g.qubits.index(qubit)]


def gates_commute(a: GateInstance, b: GateInstance) -> bool:
    """
    True when the rule set guarantees a and b commute.

    Disjoint gates commute. Otherwise every shared qubit must see the same
    role from both gates ('z' with 'z' or 'x' with 'x'); both gates are then
    block diagonal in a common product basis on the shared qubits.
    """
    shared = set(a.qubits) & set(b.qubits)
    if not shared:
        return True
    for q in shared:
        ra, rb = qubit_role(a, q), qubit_role(b, q)
        if ra is None or ra != rb:
            return False
    return True

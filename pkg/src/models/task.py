import numpy as np
from dataclasses import dataclass, field
from typing import List, Optional, Tuple, Union

from src.exceptions import TaskMismatch
from src.utils.data_loader import decode_complex_matrix, encode_complex_matrix
from src.utils.helpers import is_unitary

OE = 'OE'  # observable extraction
SP = 'SP'  # state preparation
UC = 'UC'  # unitary compilation
TASK_KINDS = (OE, SP, UC)


@dataclass
class TrainingPair:
    # OE: one density matrix per data qubit. SP: a single register density
    # matrix, or None for the device's own |0...0> preparation.
    inputs: Tuple[Optional[np.ndarray], ...]
    # OE: exact real label. SP: target pure state vector.
    label: Union[float, np.ndarray]

    def to_dict(self) -> dict:
        inputs = [None if x is None else encode_complex_matrix(x) for x in self.inputs]
        if isinstance(self.label, np.ndarray):
            label = {'state': encode_complex_matrix(self.label)}
        else:
            label = float(self.label)
        return {'inputs': inputs, 'label': label}

    @classmethod
    def from_dict(cls, data: dict) -> 'TrainingPair':
        inputs = tuple(None if x is None else decode_complex_matrix(x) for x in data['inputs'])
        label = data['label']
        if isinstance(label, dict):
            label = decode_complex_matrix(label['state'])
        else:
            label = float(label)
        return cls(inputs=inputs, label=label)


@dataclass
class TrainingSet:
    pairs: List[TrainingPair] = field(default_factory=list)

    def __len__(self):
        return len(self.pairs)

    def __iter__(self):
        return iter(self.pairs)

    def labels(self) -> np.ndarray:
        return np.array([p.label for p in self.pairs], dtype=float)

    def to_dict(self) -> dict:
        return {'pairs': [p.to_dict() for p in self.pairs]}

    @classmethod
    def from_dict(cls, data: dict) -> 'TrainingSet':
        return cls(pairs=[TrainingPair.from_dict(p) for p in data['pairs']])


@dataclass
class Task:
    kind: str
    n_qubits: int
    training: Optional[TrainingSet] = None
    measured_qubit: Optional[int] = None
    data_qubits: Tuple[int, ...] = ()
    target_unitary: Optional[np.ndarray] = None
    fidelity_method: str = 'choi'
    noisy_prep: bool = True
    name: str = ''

    def validate(self) -> None:
        if self.kind not in TASK_KINDS:
            raise TaskMismatch(f"unknown task kind {self.kind!r}")
        if self.kind in (OE, SP) and (self.training is None or len(self.training) == 0):
            raise TaskMismatch(f"{self.kind} task needs a non-empty training set")
        if self.kind == OE:
            if self.measured_qubit is None or not 0 <= self.measured_qubit < self.n_qubits:
                raise TaskMismatch("OE task needs exactly one measured qubit")
            for pair in self.training:
                if len(pair.inputs) != len(self.data_qubits):
                    raise TaskMismatch("each OE input needs one state per data qubit")
        elif self.kind == SP:
            for pair in self.training:
                psi = np.asarray(pair.label)
                if psi.shape != (2 ** self.n_qubits,):
                    raise TaskMismatch("SP target has the wrong dimension")
                if not np.isclose(np.linalg.norm(psi), 1.0, atol=1e-10):
                    raise TaskMismatch("SP target state is not normalized")
        elif self.kind == UC:
            U = self.target_unitary
            if U is None or U.shape != (2 ** self.n_qubits,) * 2 or not is_unitary(U):
                raise TaskMismatch("UC task needs a target unitary on the register")

    def require(self, kind: str) -> None:
        if self.kind != kind:
            raise TaskMismatch(f"expected a {kind} task, got {self.kind}")

    def to_dict(self) -> dict:
        return {
            'kind': self.kind,
            'n_qubits': self.n_qubits,
            'name': self.name,
            'training': self.training.to_dict() if self.training is not None else None,
            'measured_qubit': self.measured_qubit,
            'data_qubits': list(self.data_qubits),
            'target_unitary': (encode_complex_matrix(self.target_unitary)
                               if self.target_unitary is not None else None),
            'fidelity_method': self.fidelity_method,
            'noisy_prep': self.noisy_prep,
        }

    @classmethod
    def from_dict(cls, data: dict) -> 'Task':
        training = data.get('training')
        target = data.get('target_unitary')
        return cls(
            kind=data['kind'],
            n_qubits=int(data['n_qubits']),
            name=data.get('name', ''),
            training=TrainingSet.from_dict(training) if training is not None else None,
            measured_qubit=data.get('measured_qubit'),
            data_qubits=tuple(data.get('data_qubits', ())),
            target_unitary=decode_complex_matrix(target) if target is not None else None,
            fidelity_method=data.get('fidelity_method', 'choi'),
            noisy_prep=bool(data.get('noisy_prep', True)),
        )

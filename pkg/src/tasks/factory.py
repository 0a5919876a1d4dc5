import numpy as np
from typing import Sequence

from src.models import OE, SP, UC, Task, TrainingPair, TrainingSet


def overlap_task(training: TrainingSet, n_qubits: int = 3, measured_qubit: int = 0,
                 data_qubits: Sequence[int] = (1, 2), name: str = 'overlap') -> Task:
    task = Task(kind=OE, n_qubits=n_qubits, training=training,
                measured_qubit=measured_qubit, data_qubits=tuple(data_qubits), name=name)
    task.validate()
    return task


def state_prep_task(target_state: np.ndarray, n_qubits: int, name: str = 'state_prep',
                    noisy_prep: bool = True) -> Task:
    """Prepare `target_state` from the device's |0...0>."""
    target = np.asarray(target_state, dtype=complex).reshape(-1)
    training = TrainingSet([TrainingPair(inputs=(None,), label=target)])
    task = Task(kind=SP, n_qubits=n_qubits, training=training, name=name,
                noisy_prep=noisy_prep)
    task.validate()
    return task


def unitary_task(target_unitary: np.ndarray, method: str = 'choi', name: str = 'unitary') -> Task:
    U = np.asarray(target_unitary, dtype=complex)
    n = int(round(np.log2(U.shape[0])))
    task = Task(kind=UC, n_qubits=n, target_unitary=U, fidelity_method=method, name=name)
    task.validate()
    return task

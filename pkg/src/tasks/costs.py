import numpy as np
from typing import Callable, Sequence, Union

from src.channels import (
    PauliVector, density_to_pauli, product_state, ptm_from_unitary, pure_state_pauli, zero_state,
)
from src.devices import DeviceModel
from src.exceptions import TaskMismatch
from src.models import OE, SP, UC, Circuit, LayeredCircuit, Task
from src.simulator import as_layered, average_gate_fidelity, expect_z_batch, run_noisy_batch

REDUCTIONS = ('mean', 'max')


class CostEvaluator:
    """
    Noisy cost of circuits for one task on one device.

    Inputs, labels and the target PTM are prepared once; every call
    parallelizes the circuit, runs it through the noisy simulator and counts
    one evaluation.
    """

    def __init__(self, task: Task, device: DeviceModel, reduction: str = 'mean',
                 ideal_readout: bool = False):
        task.validate()
        if task.n_qubits != device.n_qubits:
            raise TaskMismatch(
                f"task acts on {task.n_qubits} qubits, device {device.name} has {device.n_qubits}")
        if reduction not in REDUCTIONS:
            raise ValueError(f"reduction must be one of {REDUCTIONS}")
        self.task = task
        self.device = device
        self.reduction = reduction
        self.ideal_readout = ideal_readout
        self.n_evals = 0

        self._inputs = None
        self._labels = None
        self._targets = None
        self._target_ptm = None
        if task.kind == OE:
            self._inputs = self._oe_inputs()
            self._labels = task.training.labels()
        elif task.kind == SP:
            self._inputs = self._sp_inputs()
            self._targets = np.stack(
                [pure_state_pauli(p.label).coefficients for p in task.training], axis=1)
        else:
            self._target_ptm = ptm_from_unitary(task.target_unitary)

    def _qubit_prep(self) -> PauliVector:
        if self.task.noisy_prep:
            return self.device.qubit_prep()
        return zero_state(1)

    def _oe_inputs(self) -> np.ndarray:
        # data qubits carry the exact training states, the rest start from the device prep
        prep = self._qubit_prep()
        columns = []
        for pair in self.task.training:
            factors = [prep] * self.task.n_qubits
            for q, rho in zip(self.task.data_qubits, pair.inputs):
                factors[q] = density_to_pauli(rho)
            columns.append(product_state(factors).coefficients)
        return np.stack(columns, axis=1)

    def _sp_inputs(self) -> np.ndarray:
        columns = []
        for pair in self.task.training:
            rho = pair.inputs[0] if pair.inputs else None
            if rho is None:
                v = product_state([self._qubit_prep()] * self.task.n_qubits)
            else:
                v = density_to_pauli(rho)
            columns.append(v.coefficients)
        return np.stack(columns, axis=1)

    def estimates(self, circuit: Union[Circuit, LayeredCircuit]) -> np.ndarray:
        """Per-pair readouts (OE) or fidelities (SP)."""
        lc = as_layered(circuit, self.device)
        out = run_noisy_batch(lc, self.device, self._inputs)
        if self.task.kind == OE:
            return expect_z_batch(out, self.task.n_qubits, self.task.measured_qubit,
                                  self.device, self.ideal_readout)
        return np.einsum('ij,ij->j', out, self._targets)

    def __call__(self, circuit: Union[Circuit, LayeredCircuit]) -> float:
        self.n_evals += 1
        if self.task.kind == OE:
            err = self.estimates(circuit) - self._labels
            sq = err ** 2
            return float(np.max(sq) if self.reduction == 'max' else np.mean(sq))
        if self.task.kind == SP:
            return float(1.0 - np.mean(self.estimates(circuit)))
        fid = average_gate_fidelity(circuit, self.device, self.task.target_unitary,
                                    method=self.task.fidelity_method,
                                    target_ptm=self._target_ptm)
        return float(1.0 - fid)

    def for_structure(self, circuit: Circuit) -> Callable[[Sequence[float]], float]:
        return lambda angles: self(circuit.with_angles(angles))


def cost_oe(task: Task, circuit: Union[Circuit, LayeredCircuit], device: DeviceModel,
            reduction: str = 'mean', ideal_readout: bool = False) -> float:
    """Mean squared error between noisy readouts and the exact labels."""
    task.require(OE)
    return CostEvaluator(task, device, reduction, ideal_readout)(circuit)


def cost_sp(task: Task, circuit: Union[Circuit, LayeredCircuit], device: DeviceModel) -> float:
    task.require(SP)
    return CostEvaluator(task, device)(circuit)


def cost_uc(task: Task, circuit: Union[Circuit, LayeredCircuit], device: DeviceModel) -> float:
    task.require(UC)
    return CostEvaluator(task, device)(circuit)


def task_cost(task: Task, circuit: Union[Circuit, LayeredCircuit], device: DeviceModel) -> float:
    return CostEvaluator(task, device)(circuit)

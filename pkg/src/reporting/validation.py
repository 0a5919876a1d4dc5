import numpy as np
import pandas as pd
from typing import Mapping, Optional, Tuple

from src.channels import operator_to_pauli
from src.devices import DeviceModel
from src.exceptions import SampleSpecError
from src.models import Circuit
from src.simulator import as_layered, average_gate_fidelity, run_noisy_batch
from src.tasks import CostEvaluator, gen_overlap_training, overlap_task, sample_states
from .config import parse_sample_spec

# (measured qubit, (data qubit, data qubit)) of an overlap circuit
OverlapLayout = Tuple[int, Tuple[int, int]]
DEFAULT_LAYOUT: OverlapLayout = (0, (1, 2))


def overlap_report(circuits: Mapping[str, Circuit], device: DeviceModel, sample_spec,
                   layouts: Optional[Mapping[str, OverlapLayout]] = None) -> pd.DataFrame:
    """
    Overlap estimates of every circuit on one random validation set.

    Error is |estimate - Tr(rho sigma)|; rows are sorted by the first
    circuit's error, smallest first.
    """
    spec = parse_sample_spec(sample_spec)
    distribution = 'hs_mixed' if spec.kind == 'overlap' else 'haar_pure'
    training = gen_overlap_training(spec.count, spec.seed, distribution)
    layouts = layouts or {}

    df = pd.DataFrame({'index': np.arange(len(training)), 'exact_overlap': training.labels()})
    for name, circuit in circuits.items():
        measured, data = layouts.get(name, DEFAULT_LAYOUT)
        task = overlap_task(training, circuit.n_qubits, measured, data, name=name)
        estimates = CostEvaluator(task, device).estimates(circuit)
        df[f'estimate_{name}'] = estimates
        df[f'error_{name}'] = np.abs(estimates - df['exact_overlap'].to_numpy())

    first = next(iter(circuits))
    return df.sort_values(f'error_{first}', kind='mergesort').reset_index(drop=True)


def unitary_report(circuits: Mapping[str, Circuit], device: DeviceModel, target: np.ndarray,
                   sample_spec) -> pd.DataFrame:
    """
    Per-state infidelity 1 - <psi_ex| rho_j |psi_ex> over Haar-random inputs.

    The predicted_<name> column repeats the channel-level value
    1 - (d F_e + 1) / (d + 1), which the sample mean should approach.
    """
    spec = parse_sample_spec(sample_spec)
    if spec.kind != 'haar_pure':
        raise SampleSpecError("unitary validation needs 'haar_pure' input states")
    target = np.asarray(target, dtype=complex)
    n = device.n_qubits
    psi = sample_states('haar_pure', n, spec.count, spec.seed)
    ideal = psi @ target.T

    inputs = np.stack([operator_to_pauli(np.outer(s, s.conj())).real for s in psi], axis=1)
    expected = np.stack([operator_to_pauli(np.outer(s, s.conj())).real for s in ideal], axis=1)

    df = pd.DataFrame({'index': np.arange(spec.count)})
    for name, circuit in circuits.items():
        out = run_noisy_batch(as_layered(circuit, device), device, inputs)
        df[f'infidelity_{name}'] = 1.0 - np.einsum('ij,ij->j', out, expected)
        df[f'predicted_{name}'] = 1.0 - average_gate_fidelity(circuit, device, target)

    first = next(iter(circuits))
    return df.sort_values(f'infidelity_{first}', kind='mergesort').reset_index(drop=True)


def validation_report(circuits: Mapping[str, Circuit], device: DeviceModel, sample_spec,
                      target: Optional[np.ndarray] = None,
                      layouts: Optional[Mapping[str, OverlapLayout]] = None) -> pd.DataFrame:
    """Overlap report when no target unitary is given, unitary report otherwise."""
    if not circuits:
        raise ValueError("no circuits to validate")
    if target is None:
        return overlap_report(circuits, device, sample_spec, layouts)
    return unitary_report(circuits, device, target, sample_spec)


def win_rate(report: pd.DataFrame, challenger: str, reference: str) -> float:
    """Fraction of rows where `challenger` has the smaller error."""
    return float(np.mean(report[f'error_{challenger}'] < report[f'error_{reference}']))

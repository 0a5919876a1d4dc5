import logging
from typing import Dict, Optional, Tuple

from src.circuits import ideal_unitary, permute_qubits
from src.devices import DeviceModel, restrict
from src.exceptions import ConfigError, DimensionMismatch
from src.models import CNOT, X90, Z, Circuit, TrainingSet
from src.tasks import CostEvaluator, gen_overlap_training, overlap_task, state_prep_task, unitary_task
from .permutations import PermutationResult, best_permutation_compile
from .qft import qft_circuit
from .swap_test import swap_test_circuit
from .w_state import w_state_circuit, w_state_vector

logger = logging.getLogger(__name__)

BASELINES = ('swap-test', 'w4', 'w5', 'qft3')

# physical qubits each baseline is compiled onto
BASELINE_QUBITS: Dict[str, Tuple[int, ...]] = {
    'swap-test': (0, 1, 2),
    'w4': (0, 1, 2, 3),
    'w5': (0, 1, 2, 3, 4),
    'qft3': (0, 1, 2),
}

METRICS = {
    'swap-test': 'mean_squared_error',
    'w4': 'fidelity',
    'w5': 'fidelity',
    'qft3': 'average_infidelity',
}

# figures reported for the textbook circuits on the Ourense model
PUBLISHED = {'swap-test': None, 'w4': 0.671, 'w5': 0.675, 'qft3': 0.289}


def textbook_circuit(name: str) -> Circuit:
    if name == 'swap-test':
        return swap_test_circuit()
    if name == 'w4':
        return w_state_circuit(4)
    if name == 'w5':
        return w_state_circuit(5)
    if name == 'qft3':
        return qft_circuit(3)
    raise ConfigError('baseline', f"unknown baseline {name!r}; use one of {BASELINES}")


def baseline_device(name: str, device: DeviceModel) -> DeviceModel:
    qubits = BASELINE_QUBITS[name]
    if device.n_qubits < len(qubits):
        raise DimensionMismatch(
            f"{name} needs {len(qubits)} qubits, {device.name} has {device.n_qubits}")
    if device.n_qubits == len(qubits):
        return device
    return restrict(device, qubits)


def compile_baseline(name: str, device: DeviceModel,
                     training: Optional[TrainingSet] = None) -> PermutationResult:
    """Best relabelling of a textbook circuit on the baseline's qubits of `device`."""
    textbook = textbook_circuit(name)
    dev = baseline_device(name, device)

    if name == 'swap-test':
        training = gen_overlap_training(200, 0) if training is None else training

        def cost_fn(circuit, perm):
            task = overlap_task(training, 3, measured_qubit=perm[0], data_qubits=(perm[1], perm[2]))
            return CostEvaluator(task, dev)(circuit)
    elif name in ('w4', 'w5'):
        n = textbook.n_qubits
        evaluator = CostEvaluator(state_prep_task(w_state_vector(n), n, name=name), dev)

        def cost_fn(circuit, perm):
            return evaluator(circuit)
    else:
        def cost_fn(circuit, perm):
            target = ideal_unitary(permute_qubits(textbook, perm))
            return CostEvaluator(unitary_task(target, name=name), dev)(circuit)

    return best_permutation_compile(textbook, dev, cost_fn)


def metric_from_cost(name: str, cost: float) -> float:
    if METRICS[name] == 'fidelity':
        return 1.0 - cost
    return cost


def baseline_summary(name: str, device: DeviceModel, training: Optional[TrainingSet] = None,
                     result: Optional[PermutationResult] = None) -> dict:
    """Textbook metric on `device` next to the published figure."""
    if result is None:
        result = compile_baseline(name, device, training)
    value = metric_from_cost(name, result.cost)
    logger.info("Baseline %s on %s: %s = %.4f (published %s)", name, device.name,
                METRICS[name], value, PUBLISHED[name])
    return {
        'baseline': name,
        'device': device.name,
        'metric': METRICS[name],
        'value': value,
        'published': PUBLISHED[name],
        'permutation': list(result.permutation),
        'gate_count': len(result.circuit),
        'cnot_count': result.circuit.two_qubit_count,
    }


# textbook circuits are written in Z, X90 and CNOT
def supports_textbook(device: DeviceModel) -> bool:
    return all(name in device.alphabet for name in (Z, X90, CNOT))

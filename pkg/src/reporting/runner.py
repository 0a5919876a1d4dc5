import logging
import time
import pandas as pd
from dataclasses import replace
from pathlib import Path
from typing import Dict, Optional, Union

from src.baselines import (
    PermutationResult, baseline_device, baseline_summary, compile_baseline, compile_permuted,
    qft_target, supports_textbook, textbook_circuit, w_state_vector,
)
from src.circuits import ideal_unitary, permute_qubits, save_circuit
from src.devices import DeviceModel, resolve_device, restrict
from src.exceptions import BudgetExhausted, ConfigError
from src.models import OE, SP, UC, Circuit, Task
from src.optimizer import optimize
from src.tasks import CostEvaluator, gen_overlap_training, overlap_task, state_prep_task, unitary_task
from src.utils import save_json
from .config import RunConfig, TaskSection, load_config, parse_sample_spec
from .validation import validation_report

logger = logging.getLogger(__name__)

TRAJECTORY_COLUMNS = ['restart', 'wall_ms', 'n_evals', 'best_cost', 'current_L']


def task_device(section: TaskSection, device: DeviceModel) -> DeviceModel:
    """The device restricted to the task's physical qubits."""
    qubits = section.qubits()
    if any(not 0 <= q < device.n_qubits for q in qubits):
        raise ConfigError('task.physical_qubits',
                          f"{list(qubits)} not on {device.name} ({device.n_qubits} qubits)")
    if qubits == tuple(range(device.n_qubits)):
        return device
    return restrict(device, qubits)


def build_task(section: TaskSection) -> Task:
    n = section.n_qubits
    if section.kind == 'overlap':
        spec = parse_sample_spec(section.training)
        distribution = 'hs_mixed' if spec.kind == 'overlap' else 'haar_pure'
        return overlap_task(gen_overlap_training(spec.count, spec.seed, distribution), n)
    if section.kind == 'w_state':
        return state_prep_task(w_state_vector(n), n, name=f'w{n}')
    if section.kind == 'qft':
        return unitary_task(qft_target(n), method=section.fidelity_method, name=f'qft{n}')
    raise ConfigError('task.kind', f"unknown task kind {section.kind!r}")


def baseline_for(section: TaskSection) -> Optional[str]:
    """Name of the textbook circuit matching a task, if one exists."""
    if section.kind == 'overlap':
        return 'swap-test'
    if section.kind == 'w_state' and section.n_qubits in (4, 5):
        return f'w{section.n_qubits}'
    if section.kind == 'qft' and section.n_qubits == 3:
        return 'qft3'
    return None


def fidelity_or_metric(task: Task, cost: float) -> float:
    # state preparation reports fidelity, the other tasks their cost
    return 1.0 - cost if task.kind == SP else cost


def _validation_circuits(task: Task, device: DeviceModel, circuit: Circuit,
                         baseline_name: Optional[str], baseline: Optional[PermutationResult]):
    circuits: Dict[str, Circuit] = {}
    layouts = {}
    if baseline is not None and task.kind == OE:
        p = baseline.permutation
        circuits['textbook'] = baseline.circuit
        layouts['textbook'] = (p[0], (p[1], p[2]))
    elif baseline is not None and task.kind == UC:
        # a relabelled textbook circuit implements a relabelled target, so compare the unpermuted one
        identity = tuple(range(task.n_qubits))
        circuits['textbook'] = compile_permuted(textbook_circuit(baseline_name), identity, device)
    circuits['compiled'] = circuit
    if task.kind == OE:
        layouts['compiled'] = (task.measured_qubit, tuple(task.data_qubits))
    return circuits, layouts


def _baseline_validation(task: Task, baseline_name: str, baseline: PermutationResult):
    # validate the relabelled textbook circuit against its own readout qubits and target
    p = baseline.permutation
    circuits = {'textbook': baseline.circuit}
    layouts = {'textbook': (p[0], (p[1], p[2]))} if task.kind == OE else {}
    target = None
    if task.kind == UC:
        target = ideal_unitary(permute_qubits(textbook_circuit(baseline_name), p))
    return circuits, layouts, target


def run_task(config: Union[RunConfig, str, Path], out_dir: Union[str, Path] = 'results',
             strict_budget: bool = False) -> dict:
    """
    Execute one configured run and write its artifacts.

    Writes best_circuit.txt, trajectory.csv and summary.json (and
    validation.csv for overlap and unitary tasks) under `out_dir`. With
    `strict_budget`, running out of wall-clock time raises BudgetExhausted
    after the artifacts are written.
    """
    if not isinstance(config, RunConfig):
        config = load_config(config)
    config.validate()
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)

    device = task_device(config.task, resolve_device(config.device, config.task.n_qubits))
    task = build_task(config.task)
    baseline_name = baseline_for(config.task)
    if not supports_textbook(device):
        if config.mode == 'baseline':
            raise ConfigError('device', f"textbook circuits need Z, X90 and CNOT; {device.name} lacks them")
        baseline_name = None
    elif config.mode == 'baseline' and baseline_name is None:
        raise ConfigError('mode', f"no textbook baseline for task {task.name}")
    training = task.training if task.kind == OE else None

    start = time.perf_counter()
    baseline = None
    if baseline_name and (config.mode == 'baseline' or config.validation.compare_baseline):
        baseline = compile_baseline(baseline_name, device, training)

    if config.mode == 'optimize':
        optimizer = replace(config.optimizer, seed=config.seed)
        evaluator = CostEvaluator(task, device, reduction=config.task.reduction)
        run = optimize(task, device, optimizer, evaluator)
        circuit, cost = run.best_circuit, run.best_cost
        trajectory = run.to_dataframe()
        n_evals, reason = run.n_evals, run.termination_reason
    else:
        circuit, cost = baseline.circuit, baseline.cost
        trajectory = pd.DataFrame(columns=TRAJECTORY_COLUMNS)
        n_evals, reason = len(baseline.table), 'baseline'
    wall_ms = (time.perf_counter() - start) * 1000.0

    save_circuit(circuit, out / 'best_circuit.txt',
                 header=f"{task.name} on {device.name}\ncost {cost!r}")
    trajectory.to_csv(out / 'trajectory.csv', index=False)
    summary = {
        'task': task.name,
        'device': device.name,
        'seed': config.seed,
        'best_cost': float(cost),
        'fidelity_or_metric': float(fidelity_or_metric(task, cost)),
        'n_evals': int(n_evals),
        'wall_ms': wall_ms,
        'termination_reason': reason,
    }
    save_json(summary, out / 'summary.json')

    if config.validation.enabled and task.kind != SP:
        if config.mode == 'optimize':
            circuits, layouts = _validation_circuits(task, device, circuit, baseline_name, baseline)
            target = task.target_unitary if task.kind == UC else None
        else:
            circuits, layouts, target = _baseline_validation(task, baseline_name, baseline)
        report = validation_report(circuits, device, config.validation.sample, target, layouts)
        report.to_csv(out / 'validation.csv', index=False)
    logger.info("Artifacts written to %s", out)

    if strict_budget and reason == 'budget':
        raise BudgetExhausted(f"budget of {config.optimizer.budget_seconds}s exhausted", summary)
    return summary


def run_baseline(name: str, device: DeviceModel, out_dir: Optional[Union[str, Path]] = None) -> dict:
    """Textbook baseline metric; optionally saves the compiled circuit and a JSON summary."""
    result = compile_baseline(name, device)
    summary = baseline_summary(name, device, result=result)
    if out_dir is not None:
        out = Path(out_dir)
        dev = baseline_device(name, device)
        save_circuit(result.circuit, out / f'{name}_circuit.txt',
                     header=f"{name} textbook on {dev.name}, permutation {list(result.permutation)}")
        result.table.to_csv(out / f'{name}_permutations.csv', index=False)
        save_json(summary, out / f'{name}_summary.json')
    return summary

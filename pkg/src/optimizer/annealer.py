import logging
import time
import numpy as np
import pandas as pd
from dataclasses import dataclass, field
from typing import List, Optional, Sequence

from src.circuits import simplify
from src.devices import DeviceModel
from src.exceptions import BadParams
from src.models import Circuit, Task
from src.tasks import CostEvaluator
from .config import MeshSearchSettings, OptimizerConfig
from .mesh_search import inner_search
from .moves import identity_catalog, random_initial_circuit, random_move

logger = logging.getLogger(__name__)


@dataclass
class TrajectoryPoint:
    restart: int
    wall_ms: float
    n_evals: int
    best_cost: float
    current_L: int


@dataclass
class OptRun:
    best_circuit: Circuit
    best_cost: float
    trajectory: List[TrajectoryPoint] = field(default_factory=list)
    termination_reason: str = 'max_iterations'
    n_evals: int = 0
    wall_ms: float = 0.0
    restarts_completed: int = 0

    def to_dataframe(self) -> pd.DataFrame:
        if not self.trajectory:
            return pd.DataFrame(columns=['restart', 'wall_ms', 'n_evals', 'best_cost', 'current_L'])
        return pd.DataFrame([vars(p) for p in self.trajectory])

    def summary(self) -> dict:
        return {
            'best_cost': float(self.best_cost),
            'circuit_length': len(self.best_circuit),
            'two_qubit_count': self.best_circuit.two_qubit_count,
            'n_evals': self.n_evals,
            'wall_ms': self.wall_ms,
            'restarts_completed': self.restarts_completed,
            'termination_reason': self.termination_reason,
        }


def accept(cost_old: float, cost_new: float, temperature: float,
           rng: np.random.Generator) -> bool:
    """Metropolis rule: always take improvements, otherwise with probability exp(-(c' - c) / T)."""
    if temperature <= 0:
        raise BadParams(f"temperature must be > 0, got {temperature}")
    if cost_new <= cost_old:
        return True
    return bool(rng.random() < np.exp(-(cost_new - cost_old) / temperature))


class _Budget:
    def __init__(self, seconds: Optional[float]):
        self.seconds = seconds
        self.start = time.perf_counter()

    @property
    def elapsed_ms(self) -> float:
        return (time.perf_counter() - self.start) * 1000.0

    def exhausted(self) -> bool:
        return self.seconds is not None and self.elapsed_ms >= self.seconds * 1000.0


def _settle(circuit: Circuit, evaluator: CostEvaluator, settings: MeshSearchSettings,
            rng: np.random.Generator):
    res = inner_search(circuit.angles(), evaluator.for_structure(circuit), settings, rng)
    return circuit.with_angles(res.angles), res.cost


def optimize(task: Task, device: DeviceModel, config: Optional[OptimizerConfig] = None,
             evaluator: Optional[CostEvaluator] = None) -> OptRun:
    """
    Two-loop search for a low-cost circuit.

    Each restart draws a random initial circuit, tunes its angles, then
    repeatedly mutates the structure, re-tunes the mutant's angles and keeps
    it under the annealing rule. Running out of wall-clock budget ends the
    search with termination_reason 'budget' and the best circuit so far.
    """
    config = OptimizerConfig() if config is None else config
    config.validate()
    evaluator = CostEvaluator(task, device) if evaluator is None else evaluator
    catalog = identity_catalog(device)
    budget = _Budget(config.budget_seconds)
    evals_before = evaluator.n_evals

    run = OptRun(best_circuit=Circuit(device.n_qubits), best_cost=np.inf)
    seeds = np.random.SeedSequence(config.seed).spawn(config.restart_count)

    for restart, seed in enumerate(seeds):
        if budget.exhausted():
            run.termination_reason = 'budget'
            break
        rng = np.random.default_rng(seed)
        logger.info("Restart %d/%d for task %s on %s", restart + 1, config.restart_count,
                    task.name, device.name)

        current = random_initial_circuit(device, rng, config.min_initial_length,
                                         config.max_initial_length)
        current, cost = _settle(current, evaluator, config.mesh, rng)
        restart_best = cost
        if cost < run.best_cost:
            run.best_circuit, run.best_cost = current, cost

        for k in range(config.max_iterations):
            if budget.exhausted():
                run.termination_reason = 'budget'
                break
            kind, mutant = random_move(current, device, rng, config.move_weights, catalog)
            if config.simplify_period and (k + 1) % config.simplify_period == 0:
                mutant = simplify(mutant)
            mutant, mutant_cost = _settle(mutant, evaluator, config.mesh, rng)

            if accept(cost, mutant_cost, config.temperature(k), rng):
                logger.debug("iter %d: accepted %s, cost %.6g -> %.6g, L=%d",
                             k, kind, cost, mutant_cost, len(mutant))
                current, cost = mutant, mutant_cost
            restart_best = min(restart_best, cost)
            if cost < run.best_cost:
                run.best_circuit, run.best_cost = current, cost

            run.trajectory.append(TrajectoryPoint(
                restart=restart,
                wall_ms=budget.elapsed_ms,
                n_evals=evaluator.n_evals - evals_before,
                best_cost=float(run.best_cost),
                current_L=len(current),
            ))

        run.restarts_completed = restart + 1
        logger.info("Restart %d finished: best %.6g (overall %.6g)", restart + 1,
                    restart_best, run.best_cost)
        if run.termination_reason == 'budget':
            break

    if run.termination_reason == 'budget':
        logger.warning("Wall-clock budget of %.1fs exhausted after %d restarts; "
                       "returning best cost %.6g", config.budget_seconds,
                       run.restarts_completed, run.best_cost)
    run.n_evals = evaluator.n_evals - evals_before
    run.wall_ms = budget.elapsed_ms
    return run


def tail_indices(circuit: Circuit, qubit: int, start: int) -> List[int]:
    """Parametric gates acting only on `qubit` at positions >= start."""
    return [i for i in circuit.parametric_indices
            if i >= start and circuit[i].qubits == (qubit,)]


def reoptimize_tail(circuit: Circuit, qubit: int, start: int, device: DeviceModel, task: Task,
                    config: Optional[OptimizerConfig] = None,
                    evaluator: Optional[CostEvaluator] = None):
    """Re-search the rotations on `qubit` from `start` on; returns (circuit, cost, start cost)."""
    config = OptimizerConfig() if config is None else config
    evaluator = CostEvaluator(task, device) if evaluator is None else evaluator
    free = tail_indices(circuit, qubit, start)
    all_idx = circuit.parametric_indices
    base = circuit.angles()
    slots = [all_idx.index(i) for i in free]

    def cost_of(sub: Sequence[float]) -> float:
        angles = base.copy()
        angles[slots] = sub
        return evaluator(circuit.with_angles(angles))

    start_cost = evaluator(circuit)
    res = inner_search(base[slots], cost_of, config.mesh, np.random.default_rng(config.seed))
    if res.cost >= start_cost:
        return circuit, start_cost, start_cost
    angles = base.copy()
    angles[slots] = res.angles
    return circuit.with_angles(angles), res.cost, start_cost

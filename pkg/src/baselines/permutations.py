import itertools
import logging
import numpy as np
import pandas as pd
from dataclasses import dataclass
from typing import Callable, Iterable, Optional, Sequence, Tuple

from src.circuits import permute_qubits, simplify
from src.devices import DeviceModel
from src.exceptions import DimensionMismatch
from src.models import Circuit
from .routing import compile_to_device

logger = logging.getLogger(__name__)

# costs closer than this count as a tie
COST_TIE_ATOL = 1e-12

PermutationCost = Callable[[Circuit, Tuple[int, ...]], float]


@dataclass
class PermutationResult:
    circuit: Circuit
    permutation: Tuple[int, ...]
    cost: float
    table: pd.DataFrame

    def __iter__(self):
        return iter((self.circuit, self.permutation, self.cost))


def compile_permuted(c: Circuit, perm: Sequence[int], device: DeviceModel) -> Circuit:
    """Relabel, route off-edge CNOTs and simplify."""
    return simplify(compile_to_device(permute_qubits(c, perm), device))


def best_permutation_compile(c: Circuit, device: DeviceModel, cost_fn: PermutationCost,
                             permutations: Optional[Iterable[Sequence[int]]] = None
                             ) -> PermutationResult:
    """
    Try every qubit relabelling of `c` on `device` and keep the cheapest.

    cost_fn receives the compiled circuit and the permutation, so tasks that
    are not symmetric under relabelling can move their readout or target with
    it. Ties go to the lower gate count, then the lexicographically smaller
    permutation.
    """
    if c.n_qubits != device.n_qubits:
        raise DimensionMismatch(
            f"circuit has {c.n_qubits} qubits, device {device.name} has {device.n_qubits}")
    if permutations is None:
        permutations = itertools.permutations(range(c.n_qubits))

    rows, compiled = [], {}
    for perm in permutations:
        perm = tuple(int(p) for p in perm)
        circuit = compile_permuted(c, perm, device)
        cost = float(cost_fn(circuit, perm))
        compiled[perm] = circuit
        rows.append({
            'permutation': perm,
            'perm_key': ','.join(str(p) for p in perm),
            'cost': cost,
            'gate_count': len(circuit),
            'cnot_count': circuit.two_qubit_count,
        })

    table = pd.DataFrame(rows)
    table['cost_key'] = np.round(table['cost'] / COST_TIE_ATOL) * COST_TIE_ATOL
    table = table.sort_values(['cost_key', 'gate_count', 'perm_key'], kind='mergesort')
    table = table.drop(columns=['cost_key', 'perm_key']).reset_index(drop=True)

    best = table.iloc[0]
    perm = tuple(best['permutation'])
    logger.info("Best of %d permutations on %s: %s with cost %.6g (%d gates)",
                len(table), device.name, list(perm), best['cost'], best['gate_count'])
    return PermutationResult(compiled[perm], perm, float(best['cost']), table)

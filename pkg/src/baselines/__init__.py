from .routing import route_cnot, compile_to_device, shortest_route
from .swap_test import swap_test_circuit, ANCILLA, DATA_QUBITS
from .w_state import (
    w_state_circuit, w_state_vector, w_tree_circuit, w_split_circuit, split_probabilities,
    W_SIZES, W_SPLITS,
)
from .qft import qft_circuit, qft_matrix, qft_target, bit_reversal
from .permutations import PermutationResult, best_permutation_compile, compile_permuted
from .summary import (
    BASELINES,
    BASELINE_QUBITS,
    PUBLISHED,
    METRICS,
    textbook_circuit,
    baseline_device,
    compile_baseline,
    baseline_summary,
    metric_from_cost,
    supports_textbook,
)

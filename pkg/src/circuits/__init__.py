from .core import (
    validate_circuit,
    check_circuit,
    permute_qubits,
    inverse_permutation,
    ideal_unitary,
    apply_to_state,
    MAX_UNITARY_QUBITS,
)
from .schedule import parallelize, flatten, DEFAULT_DURATIONS
from .simplify import simplify
from .native import (
    zyz_angles,
    euler_native,
    hadamard,
    pauli_x,
    cnot,
    controlled_phase,
    g_alpha,
    g_matrix,
    g_gate,
    controlled_g,
    ry_matrix,
    t_gate,
    toffoli,
    fredkin,
)
from .text_format import read_circuit, write_circuit, load_circuit, save_circuit

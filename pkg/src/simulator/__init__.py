from .noisy import as_layered, evolve, run_noisy, run_noisy_batch, layer_ptm, process_ptm
from .readout import (
    reduced_qubit,
    observable_coefficients,
    expect_z,
    expect_z_batch,
    state_fidelity,
    mixed_state_fidelity,
    state_infidelity,
)
from .designs import stabilizer_states, haar_states, hs_mixed_states, MAX_STABILIZER_QUBITS
from .fidelity import (
    average_gate_fidelity,
    average_gate_fidelity_mc,
    entanglement_fidelity_choi,
    FIDELITY_METHODS,
    MAX_CHOI_QUBITS,
)

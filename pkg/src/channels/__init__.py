from .pauli import (
    PauliVector,
    pauli_basis,
    pauli_label,
    pauli_index,
    y_parity,
    operator_to_pauli,
    pauli_to_operator,
    density_to_pauli,
    pauli_to_density,
    pure_state_pauli,
    product_state,
    zero_state,
    maximally_mixed,
)
from .ptm import (
    PauliTransferMatrix,
    CPTPReport,
    ptm_from_unitary,
    compose,
    tensor,
    embed_local,
    choi_from_ptm,
    ptm_from_choi,
    cptp_check,
    entanglement_fidelity,
    average_fidelity_from_entanglement,
    average_gate_infidelity,
)
from .noise import pauli_flip, dephasing, depolarizing

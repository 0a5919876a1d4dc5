from .helpers import (
    TWO_PI,
    normalize_angle,
    is_zero_angle,
    n_qubits_for_dim,
    is_unitary,
    apply_local,
    phase_aligned_distance,
    equal_up_to_phase,
)
from .data_loader import (
    encode_real_matrix,
    decode_real_matrix,
    encode_complex_matrix,
    decode_complex_matrix,
    load_json,
    save_json,
)

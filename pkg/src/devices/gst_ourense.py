"""
Five-qubit superconducting device with tomography-estimated channels.

Connectivity (0-indexed): 0-1, 1-2, 1-3, 3-4. Every gate of a kind shares one
process matrix; the 2-qubit matrix is used on every edge in both orientations.
Matrices are in the Pauli basis, rounded to the published precision.
"""
import numpy as np

from src.channels import PauliTransferMatrix
from src.models import Z, X90, CNOT, IDLE
from .device import ChannelConstructor, DeviceModel, gst_alphabet

OURENSE_EDGES = ((0, 1), (1, 2), (1, 3), (3, 4))

IDLE_PTM = np.array([
    [1.0, -0.0, 0.0, -0.0],
    [0.0042, 0.9943, -0.0064, 0.0178],
    [-0.0033, 0.0120, 0.9962, 0.0186],
    [0.0029, -0.0182, -0.0167, 0.9928],
])

X90_PTM = np.array([
    [1.0, 0.0, 0.0, -0.0],
    [0.0007, 0.9988, -0.0050, -0.0055],
    [-0.0010, -0.0060, 0.0167, -0.9980],
    [-0.0017, 0.0065, 0.9979, 0.0176],
])

CNOT_PTM = np.array([
    [1.000, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0.012, 0.973, 0.016, 0.005, 0.005, -0.002, 0.012, -0.004, -0.002, 0.003, -0.004, 0.002, -0.010, 0.008, 0.015, -0.001],
    [0.001, -0.009, 0.004, -0.003, -0.002, 0.000, -0.023, 0.001, -0.006, -0.001, -0.007, 0.003, 0.005, -0.019, 0.974, 0.003],
    [0.002, 0.006, 0.000, 0.003, -0.005, -0.001, 0.002, -0.021, -0.010, 0.001, 0.003, -0.010, -0.001, -0.007, 0.004, 0.983],
    [0.002, 0.001, 0.012, -0.008, 0.015, 0.964, 0.017, 0.004, 0.001, 0.020, -0.018, 0.003, 0.048, 0.020, -0.002, -0.004],
    [0.002, -0.001, 0.004, 0.002, 0.980, 0.004, -0.002, -0.009, 0.018, 0.001, -0.005, 0.012, 0.021, 0.042, 0.002, 0.005],
    [-0.002, -0.003, 0.041, 0.002, -0.009, 0.001, 0.005, -0.018, -0.005, -0.002, 0.003, 0.977, 0.014, -0.003, 0.000, 0.012],
    [-0.003, -0.006, -0.002, 0.045, -0.006, 0.019, 0.015, 0.006, -0.002, 0.022, -0.968, -0.001, -0.006, 0.001, -0.008, 0.005],
    [0.001, 0.007, -0.004, 0.001, 0.000, -0.019, 0.017, -0.001, 0.011, 0.966, 0.019, 0.003, 0.012, 0.009, -0.002, -0.005],
    [0.001, 0.008, 0.004, -0.001, -0.021, -0.000, 0.002, -0.011, 0.981, 0.004, -0.001, -0.005, 0.014, 0.004, 0.002, 0.010],
    [-0.001, -0.005, 0.007, -0.002, 0.005, 0.005, -0.003, -0.975, -0.011, 0.002, 0.007, -0.020, -0.003, -0.002, 0.008, -0.023],
    [-0.002, -0.012, 0.004, 0.006, 0.003, -0.021, 0.967, 0.001, -0.005, 0.017, 0.016, 0.007, 0.003, 0.004, 0.021, 0.004],
    [-0.002, -0.003, -0.001, 0.001, -0.021, -0.035, -0.008, -0.001, -0.010, -0.006, 0.001, -0.006, 0.987, 0.002, 0.001, -0.000],
    [-0.008, 0.006, 0.012, -0.001, -0.043, -0.020, -0.003, 0.003, -0.010, -0.009, 0.003, 0.008, 0.011, 0.970, 0.016, 0.007],
    [0.005, -0.018, 0.973, 0.003, -0.004, -0.009, 0.002, 0.008, 0.002, 0.005, -0.001, -0.039, -0.004, -0.007, 0.005, -0.005],
    [0.000, -0.007, 0.005, 0.982, 0.005, 0.002, -0.008, 0.003, 0.003, -0.009, 0.040, 0.002, 0.002, 0.005, 0.001, 0.001],
])

# POVM effects in the standard basis; as published they are not Hermitian
E0 = np.array([[0.9997, -0.0006], [0.0055, 0.0231]])
E1 = np.array([[0.0003, 0.0006], [-0.0055, 0.9769]])

RHO0 = np.diag([0.9903, 0.0097])

# average gate / state infidelities listed next to the published matrices
PUBLISHED_METRICS = {
    'I': 2.8e-3,
    'X90': 8.8e-4,
    'CNOT': 1.9e-2,
    'rho0': 9.7e-3,
    'E0': 2.0e-3,
    'E1': 2.3e-2,
}


def builtin_gst_ourense() -> DeviceModel:
    idle = PauliTransferMatrix(1, IDLE_PTM)
    return DeviceModel(
        name='gst-ourense',
        n_qubits=5,
        edges=OURENSE_EDGES,
        alphabet=gst_alphabet(),
        channels={
            Z: ChannelConstructor('ideal', {'gate': Z}),
            X90: PauliTransferMatrix(1, X90_PTM),
            CNOT: PauliTransferMatrix(2, CNOT_PTM),
            IDLE: idle,
        },
        idle_ptm=idle,
        prep_density=RHO0,
        povm=(E0, E1),
        tol_tp=5e-4,
        tol_cp=5e-3,
    )

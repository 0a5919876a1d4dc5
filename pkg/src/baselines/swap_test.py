from src.circuits import fredkin, hadamard
from src.models import Circuit

ANCILLA = 0
DATA_QUBITS = (1, 2)


def swap_test_circuit() -> Circuit:
    """Ancilla <Z> = Tr(rho sigma) for rho, sigma on qubits 1 and 2."""
    a, (b, c) = ANCILLA, DATA_QUBITS
    gates = hadamard(a) + fredkin(a, b, c) + hadamard(a)
    return Circuit(3, tuple(gates))

"""
Decompositions into the Z(theta) / X90 / CNOT alphabet.

All sequences are returned in time order (first element applied first) and
are exact up to a global phase.
"""
import numpy as np
from typing import List, Tuple

from src.exceptions import NotUnitary
from src.models import GateInstance, Z, X90, CNOT
from src.utils.helpers import is_unitary, is_zero_angle

_X = np.array([[0, 1], [1, 0]], dtype=complex)


def ry_matrix(theta: float) -> np.ndarray:
    """exp(-i theta Y / 2)."""
    c, s = np.cos(theta / 2), np.sin(theta / 2)
    return np.array([[c, -s], [s, c]], dtype=complex)


def zyz_angles(U: np.ndarray) -> Tuple[float, float, float]:
    """(phi, theta, lam) with U = e^{ig} Rz(phi) Ry(theta) Rz(lam)."""
    U = np.asarray(U, dtype=complex)
    if U.shape != (2, 2) or not is_unitary(U):
        raise NotUnitary("expected a 2x2 unitary")
    V = U / np.sqrt(np.linalg.det(U))
    theta = 2 * np.arctan2(abs(V[1, 0]), abs(V[0, 0]))
    if abs(V[0, 0]) < 1e-12:
        plus = 0.0
        minus = 2 * np.angle(V[1, 0])
    elif abs(V[1, 0]) < 1e-12:
        plus = 2 * np.angle(V[1, 1])
        minus = 0.0
    else:
        plus = 2 * np.angle(V[1, 1])
        minus = 2 * np.angle(V[1, 0])
    phi = (plus + minus) / 2
    lam = (plus - minus) / 2
    return float(phi), float(theta), float(lam)


def euler_native(U: np.ndarray, qubit: int, drop_zero: bool = True) -> List[GateInstance]:
    """
    Any 1-qubit unitary as Z(a), X90, Z(b), X90, Z(c).

    X90 Z(b) X90 = Ry(-b) Rx(pi) and Rx(pi) Rz(a) = Rz(-a) Rx(pi), so the
    sequence equals Rz(c) Ry(-b) Rz(-a) X up to phase; matching it with the
    ZYZ angles of U X gives c = phi, b = -theta, a = -lam.
    """
    phi, theta, lam = zyz_angles(np.asarray(U) @ _X)
    seq = [
        GateInstance(Z, (qubit,), -lam),
        GateInstance(X90, (qubit,)),
        GateInstance(Z, (qubit,), -theta),
        GateInstance(X90, (qubit,)),
        GateInstance(Z, (qubit,), phi),
    ]
    if drop_zero:
        seq = [g for g in seq if not (g.name == Z and is_zero_angle(g.angle))]
    return seq


def hadamard(qubit: int) -> List[GateInstance]:
    return [
        GateInstance(Z, (qubit,), np.pi / 2),
        GateInstance(X90, (qubit,)),
        GateInstance(Z, (qubit,), np.pi / 2),
    ]


def pauli_x(qubit: int) -> List[GateInstance]:
    return [GateInstance(X90, (qubit,)), GateInstance(X90, (qubit,))]


def cnot(control: int, target: int) -> List[GateInstance]:
    return [GateInstance(CNOT, (control, target))]


def controlled_phase(control: int, target: int, theta: float) -> List[GateInstance]:
    """diag(1, 1, 1, e^{i theta}) with two CNOTs."""
    return [
        GateInstance(CNOT, (control, target)),
        GateInstance(Z, (target,), -theta / 2),
        GateInstance(CNOT, (control, target)),
        GateInstance(Z, (target,), theta / 2),
        GateInstance(Z, (control,), theta / 2),
    ]


def g_alpha(p: float) -> float:
    return float(np.arcsin(np.sqrt(p)) / 2)


def g_matrix(p: float) -> np.ndarray:
    """G(p) = u^dag X u with u = exp(-i alpha Y); G(p)|0> = sqrt(p)|0> + sqrt(1-p)|1>."""
    u = ry_matrix(2 * g_alpha(p))
    return u.conj().T @ _X @ u


def g_gate(qubit: int, p: float) -> List[GateInstance]:
    return euler_native(g_matrix(p), qubit)


def controlled_g(control: int, target: int, p: float) -> List[GateInstance]:
    """Controlled G(p) as u, CNOT, u^dag on the target."""
    alpha = g_alpha(p)
    return (euler_native(ry_matrix(2 * alpha), target)
            + cnot(control, target)
            + euler_native(ry_matrix(-2 * alpha), target))


def t_gate(qubit: int, dagger: bool = False) -> List[GateInstance]:
    return [GateInstance(Z, (qubit,), -np.pi / 4 if dagger else np.pi / 4)]


def toffoli(a: int, b: int, c: int) -> List[GateInstance]:
    """Six-CNOT Toffoli with controls a, b and target c."""
    seq = []
    seq += hadamard(c)
    seq += cnot(b, c)
    seq += t_gate(c, dagger=True)
    seq += cnot(a, c)
    seq += t_gate(c)
    seq += cnot(b, c)
    seq += t_gate(c, dagger=True)
    seq += cnot(a, c)
    seq += t_gate(b)
    seq += t_gate(c)
    seq += hadamard(c)
    seq += cnot(a, b)
    seq += t_gate(a)
    seq += t_gate(b, dagger=True)
    seq += cnot(a, b)
    return seq


def fredkin(control: int, a: int, b: int) -> List[GateInstance]:
    return cnot(b, a) + toffoli(control, a, b) + cnot(b, a)

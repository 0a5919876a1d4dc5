"""Peephole simplification over wire-adjacent gates."""
from typing import List, Optional

from src.models import Circuit, GateInstance, CNOT, X90, XX, MERGEABLE_ROTATIONS
from src.utils.helpers import is_zero_angle


def _next_on_wires(gates: List[GateInstance], i: int) -> Optional[int]:
    """Index of the next gate touching any qubit of gates[i]."""
    qubits = set(gates[i].qubits)
    for j in range(i + 1, len(gates)):
        if qubits & set(gates[j].qubits):
            return j
    return None


def _same_support(a: GateInstance, b: GateInstance) -> bool:
    if a.name == XX:
        return set(a.qubits) == set(b.qubits)
    return a.qubits == b.qubits


def _rewrite_once(gates: List[GateInstance]) -> bool:
    for i, g in enumerate(gates):
        if g.parametric and g.name in MERGEABLE_ROTATIONS and is_zero_angle(g.angle):
            del gates[i]
            return True

        j = _next_on_wires(gates, i)
        if j is None:
            continue
        h = gates[j]
        if h.name != g.name or not _same_support(g, h):
            continue

        if g.name == CNOT:
            del gates[j]
            del gates[i]
            return True

        if g.parametric and g.name in MERGEABLE_ROTATIONS:
            gates[i] = g.with_angle(g.angle + h.angle)
            del gates[j]
            return True

        if g.name == X90:
            chain = [i, j]
            while len(chain) < 4:
                k = _next_on_wires(gates, chain[-1])
                if k is None or gates[k].name != X90 or gates[k].qubits != g.qubits:
                    break
                chain.append(k)
            if len(chain) == 4:
                for k in reversed(chain):
                    del gates[k]
                return True
    return False


def simplify(c: Circuit) -> Circuit:
    """
    Apply cancellation rules until nothing changes.

    Wire-adjacent CNOT pairs cancel, wire-adjacent rotations of one family on
    the same qubits merge (angles add mod 2pi), zero rotations vanish and four
    wire-adjacent X90 on a qubit are dropped (global phase -1).
    """
    gates = list(c.gates)
    while _rewrite_once(gates):
        pass
    return Circuit(c.n_qubits, tuple(gates))

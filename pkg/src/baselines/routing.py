import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import shortest_path
from typing import List

from src.devices import DeviceModel
from src.exceptions import IllegalEdge
from src.models import CNOT, Circuit, GateInstance


def _connectivity(device: DeviceModel) -> csr_matrix:
    n = device.n_qubits
    adj = np.zeros((n, n))
    for a, b in device.edges:
        adj[a, b] = adj[b, a] = 1.0
    return csr_matrix(adj)


def shortest_route(a: int, c: int, device: DeviceModel) -> List[int]:
    """Qubits on a shortest edge path from a to c, both ends included."""
    _, pred = shortest_path(_connectivity(device), directed=False, unweighted=True,
                            return_predecessors=True, indices=c)
    if a != c and pred[a] < 0:
        raise IllegalEdge(f"qubits {a} and {c} are not connected on {device.name}")
    path = [a]
    while path[-1] != c:
        path.append(int(pred[path[-1]]))
    return path


def route_cnot(a: int, c: int, device: DeviceModel) -> List[GateInstance]:
    # off-edge: CNOT(a,b) CNOT(b,c) CNOT(a,b) CNOT(b,c) through the next qubit b on a
    # shortest path, recursing on CNOT(b,c); b ends where it started
    if device.is_edge(a, c):
        return [GateInstance(CNOT, (a, c))]
    path = shortest_route(a, c, device)
    b = path[1]
    inner = route_cnot(b, c, device)
    return [GateInstance(CNOT, (a, b))] + inner + [GateInstance(CNOT, (a, b))] + inner


def compile_to_device(circuit: Circuit, device: DeviceModel) -> Circuit:
    """Replace every off-edge CNOT with its routed bridge."""
    gates = []
    for i, g in enumerate(circuit.gates):
        if g.arity == 2 and not device.is_edge(*g.qubits):
            if g.name != CNOT:
                raise IllegalEdge(f"cannot route {g.name}{g.qubits}", index=i)
            gates.extend(route_cnot(g.qubits[0], g.qubits[1], device))
        else:
            gates.append(g)
    return Circuit(circuit.n_qubits, tuple(gates))

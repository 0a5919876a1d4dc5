"""Structural moves of the outer search: identity insertions, removals and commuting swaps."""
import numpy as np
from dataclasses import dataclass
from typing import Callable, Dict, List, Mapping, Optional, Sequence, Tuple

from src.devices import DeviceModel
from src.models import (
    CNOT, IDLE, X90, Z, Circuit, GateInstance, PARAMETRIC_GATES, gates_commute,
)
from src.utils.helpers import TWO_PI
from .config import MOVE_KINDS


@dataclass(frozen=True)
class IdentityResolution:
    """A gate sequence equal to the identity (up to global phase) for any angle."""
    name: str
    arity: int
    gate_names: Tuple[str, ...]
    build: Callable[[Tuple[int, ...], float], List[GateInstance]]

    def __call__(self, qubits: Sequence[int], theta: float = 0.0) -> List[GateInstance]:
        return self.build(tuple(qubits), theta)


def _inverse_pair(name: str) -> Callable[[Tuple[int, ...], float], List[GateInstance]]:
    return lambda qs, t: [GateInstance(name, qs, t), GateInstance(name, qs, -t)]


def _x90_cycle(qs, t):
    return [GateInstance(X90, qs)] * 4


def _cnot_pair(qs, t):
    return [GateInstance(CNOT, qs)] * 2


def _z_sandwich(qs, t):
    # X90 Z(pi) X90 = Z(pi) up to phase, so the Z angles sum to 2 pi
    return [
        GateInstance(Z, qs, t),
        GateInstance(X90, qs),
        GateInstance(Z, qs, np.pi),
        GateInstance(X90, qs),
        GateInstance(Z, qs, np.pi - t),
    ]


def identity_catalog(device: DeviceModel) -> List[IdentityResolution]:
    alphabet = device.alphabet
    catalog = []
    for name in sorted(alphabet):
        gdef = alphabet[name]
        if name in PARAMETRIC_GATES:
            kind = f"{name}-inverse-pair"
            catalog.append(IdentityResolution(kind, gdef.arity, (name,), _inverse_pair(name)))
    if X90 in alphabet:
        catalog.append(IdentityResolution('X90^4', 1, (X90,), _x90_cycle))
    if Z in alphabet and X90 in alphabet:
        catalog.append(IdentityResolution('Z-X90-sandwich', 1, (Z, X90), _z_sandwich))
    if CNOT in alphabet:
        catalog.append(IdentityResolution('CNOT^2', 2, (CNOT,), _cnot_pair))
    return catalog


def resolution_supports(res: IdentityResolution, device: DeviceModel) -> List[Tuple[int, ...]]:
    """Supports on which every gate of the resolution is legal."""
    allowed = None
    for name in res.gate_names:
        supports = set(device.legal_supports(name))
        allowed = supports if allowed is None else allowed & supports
    return sorted(allowed or ())


def random_initial_circuit(device: DeviceModel, rng: np.random.Generator,
                           min_len: int = 4, max_len: int = 24) -> Circuit:
    """Uniform length, uniform alphabet gate on a uniform legal support, uniform angles."""
    choices = [(name, device.legal_supports(name)) for name in sorted(device.alphabet)
               if name != IDLE]
    choices = [(name, sup) for name, sup in choices if sup]
    length = int(rng.integers(min_len, max_len + 1))
    gates = []
    for _ in range(length):
        name, supports = choices[int(rng.integers(len(choices)))]
        qubits = supports[int(rng.integers(len(supports)))]
        angle = float(rng.uniform(0.0, TWO_PI)) if device.alphabet[name].parametric else None
        gates.append(GateInstance(name, qubits, angle))
    return Circuit(device.n_qubits, tuple(gates))


def _swappable(c: Circuit) -> List[int]:
    return [i for i in range(len(c) - 1) if gates_commute(c[i], c[i + 1])]


def _insertable(catalog: Sequence[IdentityResolution], device: DeviceModel,
                arity: int) -> List[Tuple[IdentityResolution, List[Tuple[int, ...]]]]:
    out = []
    for res in catalog:
        if res.arity != arity:
            continue
        supports = resolution_supports(res, device)
        if supports:
            out.append((res, supports))
    return out


def random_move(c: Circuit, device: DeviceModel, rng: np.random.Generator,
                weights: Optional[Mapping[str, float]] = None,
                catalog: Optional[Sequence[IdentityResolution]] = None) -> Tuple[str, Circuit]:
    """
    Apply one weighted-random structural move and report which one.

    Weights are renormalized over the moves available for `c`; an empty
    circuit can only grow.
    """
    if weights is None:
        weights = {'insert_1q': 0.3, 'insert_2q': 0.2, 'remove': 0.3, 'swap': 0.2}
    if catalog is None:
        catalog = identity_catalog(device)

    options: Dict[str, object] = {}
    one_q = _insertable(catalog, device, 1)
    two_q = _insertable(catalog, device, 2)
    if one_q:
        options['insert_1q'] = one_q
    if two_q:
        options['insert_2q'] = two_q
    if len(c) > 0:
        options['remove'] = None
    swaps = _swappable(c)
    if swaps:
        options['swap'] = swaps
    if not options:
        return 'none', c

    kinds = [k for k in MOVE_KINDS if k in options]
    w = np.array([weights.get(k, 0.0) for k in kinds], dtype=float)
    if w.sum() <= 0:
        w = np.ones(len(kinds))
    kind = kinds[int(rng.choice(len(kinds), p=w / w.sum()))]

    if kind in ('insert_1q', 'insert_2q'):
        entries = options[kind]
        res, supports = entries[int(rng.integers(len(entries)))]
        qubits = supports[int(rng.integers(len(supports)))]
        theta = float(rng.uniform(0.0, TWO_PI))
        position = int(rng.integers(len(c) + 1))
        return kind, c.inserted(position, res(qubits, theta))
    if kind == 'remove':
        return kind, c.removed(int(rng.integers(len(c))))
    i = options['swap'][int(rng.integers(len(options['swap'])))]
    gates = list(c.gates)
    gates[i], gates[i + 1] = gates[i + 1], gates[i]
    return kind, Circuit(c.n_qubits, tuple(gates))


def propose_move(c: Circuit, device: DeviceModel, rng: np.random.Generator,
                 weights: Optional[Mapping[str, float]] = None,
                 catalog: Optional[Sequence[IdentityResolution]] = None) -> Circuit:
    return random_move(c, device, rng, weights, catalog)[1]

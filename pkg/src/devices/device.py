import logging
import numpy as np
from dataclasses import dataclass, field
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple, Union

from src.channels import (
    PauliTransferMatrix, PauliVector, cptp_check, density_to_pauli, product_state,
    ptm_from_unitary,
)
from src.exceptions import InvariantViolation, UnknownGate
from src.models import GateDef, GateInstance, gate_unitary, Z, X90, CNOT, IDLE
from src.utils.helpers import is_zero_angle

logger = logging.getLogger(__name__)

# kind -> builder(angle, **params) for parametric channels
CHANNEL_BUILDERS: Dict[str, Callable[..., PauliTransferMatrix]] = {}


def register_constructor(kind: str):
    def wrap(fn):
        CHANNEL_BUILDERS[kind] = fn
        return fn
    return wrap


@register_constructor('ideal')
def _ideal_rotation(angle: Optional[float], gate: str) -> PauliTransferMatrix:
    U = gate_unitary(gate, angle)
    if angle is not None and is_zero_angle(angle):
        n = 1 if U.shape[0] == 2 else 2
        return PauliTransferMatrix.identity(n)
    return ptm_from_unitary(U)


@dataclass(frozen=True)
class ChannelConstructor:
    """A channel family theta -> PTM, serializable as {kind, params}."""
    kind: str
    params: Dict[str, object] = field(default_factory=dict)

    def __call__(self, angle: Optional[float]) -> PauliTransferMatrix:
        builder = CHANNEL_BUILDERS.get(self.kind)
        if builder is None:
            raise UnknownGate(f"no channel constructor of kind {self.kind!r}")
        return builder(angle, **self.params)

    def to_dict(self) -> dict:
        return {'kind': self.kind, 'params': dict(self.params)}

    @classmethod
    def from_dict(cls, data: dict) -> 'ChannelConstructor':
        return cls(kind=data['kind'], params=dict(data.get('params', {})))


Channel = Union[PauliTransferMatrix, ChannelConstructor]

IDEAL_POVM = (
    np.array([[1, 0], [0, 0]], dtype=complex),
    np.array([[0, 0], [0, 1]], dtype=complex),
)
IDEAL_PREP = np.array([[1, 0], [0, 0]], dtype=complex)


def _normalize_edges(edges: Iterable[Sequence[int]]) -> Tuple[Tuple[int, int], ...]:
    return tuple(sorted({tuple(sorted((int(a), int(b)))) for a, b in edges}))


@dataclass
class DeviceModel:
    name: str
    n_qubits: int
    edges: Tuple[Tuple[int, int], ...]
    alphabet: Dict[str, GateDef]
    channels: Dict[str, Channel]
    idle_ptm: PauliTransferMatrix
    prep_density: np.ndarray = field(default_factory=lambda: IDEAL_PREP.copy())
    povm: Tuple[np.ndarray, np.ndarray] = IDEAL_POVM
    # CPTP tolerances used when validating the stored channels
    tol_tp: float = 5e-5
    tol_cp: float = 5e-3

    def __post_init__(self):
        self.edges = _normalize_edges(self.edges)
        self.prep_density = np.asarray(self.prep_density, dtype=complex)
        self.povm = tuple(np.asarray(E, dtype=complex) for E in self.povm)

    def is_edge(self, a: int, b: int) -> bool:
        return tuple(sorted((a, b))) in self.edges

    @property
    def durations(self) -> Dict[str, int]:
        return {name: gdef.duration for name, gdef in self.alphabet.items()}

    def legal_supports(self, name: str) -> List[Tuple[int, ...]]:
        gdef = self.alphabet[name]
        if gdef.arity == 1:
            candidates = [(q,) for q in range(self.n_qubits)]
        else:
            candidates = [e for a, b in self.edges for e in ((a, b), (b, a))]
        return [s for s in candidates if gdef.allows(s)]

    def prep_vector(self) -> PauliVector:
        return product_state([self.qubit_prep()] * self.n_qubits)

    def qubit_prep(self) -> PauliVector:
        return density_to_pauli(self.prep_density)

    def readout_effects(self) -> Tuple[np.ndarray, np.ndarray]:
        """Hermitian parts of the stored POVM effects."""
        return tuple((E + E.conj().T) / 2 for E in self.povm)

    def channel_for(self, g: GateInstance) -> PauliTransferMatrix:
        return channel_for(self, g)


def channel_for(d: DeviceModel, g: GateInstance) -> PauliTransferMatrix:
    """Local (arity-sized) noisy channel of a gate instance."""
    if g.name not in d.alphabet or g.name not in d.channels:
        raise UnknownGate(f"{g.name} is not in the alphabet of {d.name}")
    ch = d.channels[g.name]
    if isinstance(ch, PauliTransferMatrix):
        return ch
    return ch(g.angle)


def gst_alphabet() -> Dict[str, GateDef]:
    return {
        Z: GateDef(Z, arity=1, parametric=True, duration=0),
        X90: GateDef(X90, arity=1, parametric=False, duration=1),
        CNOT: GateDef(CNOT, arity=2, parametric=False, duration=1),
        IDLE: GateDef(IDLE, arity=1, parametric=False, duration=1),
    }


def restrict(d: DeviceModel, qubits: Sequence[int]) -> DeviceModel:
    """Sub-device on the listed physical qubits, relabelled 0..k-1, with the induced edges."""
    qubits = [int(q) for q in qubits]
    if len(set(qubits)) != len(qubits) or any(not 0 <= q < d.n_qubits for q in qubits):
        raise InvariantViolation(f"cannot restrict {d.name} to qubits {qubits}")
    mapping = {q: i for i, q in enumerate(qubits)}
    edges = [(mapping[a], mapping[b]) for a, b in d.edges if a in mapping and b in mapping]
    alphabet = {}
    for name, gdef in d.alphabet.items():
        supports = gdef.supports
        if supports is not None:
            supports = tuple(tuple(mapping[q] for q in s) for s in supports
                             if all(q in mapping for q in s))
        alphabet[name] = GateDef(gdef.name, gdef.arity, gdef.parametric, gdef.duration, supports)
    label = ','.join(str(q) for q in qubits)
    return DeviceModel(
        name=f"{d.name}[{label}]",
        n_qubits=len(qubits),
        edges=tuple(edges),
        alphabet=alphabet,
        channels=dict(d.channels),
        idle_ptm=d.idle_ptm,
        prep_density=d.prep_density,
        povm=d.povm,
        tol_tp=d.tol_tp,
        tol_cp=d.tol_cp,
    )


# angles at which parametric channels are spot-checked
_CHECK_ANGLES = (0.0, 1.0, np.pi / 2, np.pi)


def validate_device(d: DeviceModel, povm_atol: float = 1e-6) -> None:
    """Raise InvariantViolation on the first broken device invariant."""
    for a, b in d.edges:
        if a == b or not (0 <= a < d.n_qubits and 0 <= b < d.n_qubits):
            raise InvariantViolation(f"edge ({a}, {b}) is not a pair of distinct device qubits")

    for name, gdef in d.alphabet.items():
        if name not in d.channels:
            raise InvariantViolation(f"gate {name} has no channel")
        if gdef.arity == 2 and gdef.supports is not None:
            for s in gdef.supports:
                if not d.is_edge(*s):
                    raise InvariantViolation(f"gate {name} allowed on non-edge {s}")
        ch = d.channels[name]
        angles = _CHECK_ANGLES if gdef.parametric else (None,)
        for theta in angles:
            ptm = ch if isinstance(ch, PauliTransferMatrix) else ch(theta)
            if ptm.n_qubits != gdef.arity:
                raise InvariantViolation(f"channel of {name} acts on {ptm.n_qubits} qubits")
            report = cptp_check(ptm, d.tol_tp, d.tol_cp)
            if not report.passed:
                raise InvariantViolation(
                    f"channel of {name} (angle {theta}) is not CPTP: "
                    f"tp_residual={report.tp_residual:.2e}, "
                    f"min_eig={report.min_choi_eigenvalue:.2e}")

    report = cptp_check(d.idle_ptm, d.tol_tp, d.tol_cp)
    if d.idle_ptm.n_qubits != 1 or not report.passed:
        raise InvariantViolation("idle channel must be a CPTP 1-qubit channel")

    E0, E1 = d.povm
    if not np.allclose(E0 + E1, np.eye(2), atol=povm_atol):
        raise InvariantViolation("POVM effects do not sum to the identity")

    rho = d.prep_density
    if not np.allclose(rho, rho.conj().T, atol=1e-10) or not np.isclose(np.trace(rho).real, 1.0):
        raise InvariantViolation("prep density must be Hermitian with unit trace")

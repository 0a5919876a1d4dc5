"""
Trapped-ion device with an effective noise model.

Single-qubit rotations RP(theta) = exp(-i theta P) are followed, in order, by
an angle-imprecision P flip, depolarizing and dephasing. The XX(theta) gate is
followed by heating and over-rotation XX flips, then per-qubit depolarizing
and dephasing. All qubit pairs are connected.
"""
import itertools
import numpy as np
from dataclasses import asdict, dataclass, fields
from typing import Optional

from src.channels import (
    PauliTransferMatrix, dephasing, depolarizing, pauli_flip, ptm_from_unitary, tensor,
)
from src.exceptions import BadParams
from src.models import GateDef, gate_unitary, RX, RY, RZ, XX
from .device import ChannelConstructor, DeviceModel, register_constructor


@dataclass
class TrappedIonParams:
    p_d: float = 1.5e-4      # dephasing after 1q rotations
    p_dep: float = 8e-4      # depolarizing, also used for SPAM
    p_d1: float = 7.5e-4     # dephasing of the first XX qubit
    p_d2: float = 7.5e-4     # dephasing of the second XX qubit
    p_alpha: float = 1e-4    # rotation angle imprecision
    p_xx: float = 1e-3       # XX over-rotation
    p_h: float = 1.25e-3     # motional heating
    p_idle: float = 8e-4

    def validate(self) -> None:
        for f in fields(self):
            value = getattr(self, f.name)
            if not 0.0 <= value <= 1.0:
                raise BadParams(f"{f.name} = {value} is not in [0, 1]")

    @classmethod
    def zero(cls) -> 'TrappedIonParams':
        return cls(**{f.name: 0.0 for f in fields(cls)})

    def to_dict(self) -> dict:
        return asdict(self)


@register_constructor('trapped_ion_rotation')
def rotation_channel(angle: float, axis: str, p_d: float, p_dep: float,
                     p_alpha: float) -> PauliTransferMatrix:
    ideal = ptm_from_unitary(gate_unitary('R' + axis, angle))
    return dephasing(p_d) @ depolarizing(p_dep) @ pauli_flip(p_alpha, axis) @ ideal


@register_constructor('trapped_ion_xx')
def xx_channel(angle: float, p_d1: float, p_d2: float, p_dep: float,
               p_xx: float, p_h: float) -> PauliTransferMatrix:
    ideal = ptm_from_unitary(gate_unitary(XX, angle))
    heating = pauli_flip(p_h, 'XX')
    over_rotation = pauli_flip(p_xx, 'XX')
    depol = tensor(depolarizing(p_dep), depolarizing(p_dep))
    dephase = tensor(dephasing(p_d1), dephasing(p_d2))
    return dephase @ depol @ over_rotation @ heating @ ideal


def builtin_trapped_ion(params: Optional[TrappedIonParams] = None, n: int = 3) -> DeviceModel:
    params = TrappedIonParams() if params is None else params
    params.validate()
    if n < 1:
        raise BadParams(f"need at least one qubit, got {n}")

    channels = {}
    for axis, name in (('X', RX), ('Y', RY), ('Z', RZ)):
        channels[name] = ChannelConstructor('trapped_ion_rotation', {
            'axis': axis, 'p_d': params.p_d, 'p_dep': params.p_dep, 'p_alpha': params.p_alpha,
        })
    channels[XX] = ChannelConstructor('trapped_ion_xx', {
        'p_d1': params.p_d1, 'p_d2': params.p_d2, 'p_dep': params.p_dep,
        'p_xx': params.p_xx, 'p_h': params.p_h,
    })

    alphabet = {name: GateDef(name, arity=1, parametric=True) for name in (RX, RY, RZ)}
    alphabet[XX] = GateDef(XX, arity=2, parametric=True)

    # depolarized |0> and ideal effects seen through depolarizing (self-adjoint)
    p = params.p_dep
    half_eye = np.eye(2) / 2
    prep = (1 - p) * np.diag([1.0, 0.0]) + p * half_eye
    E0 = (1 - p) * np.diag([1.0, 0.0]) + p * half_eye
    E1 = (1 - p) * np.diag([0.0, 1.0]) + p * half_eye

    return DeviceModel(
        name='trapped-ion',
        n_qubits=n,
        edges=tuple(itertools.combinations(range(n), 2)),
        alphabet=alphabet,
        channels=channels,
        idle_ptm=depolarizing(params.p_idle),
        prep_density=prep,
        povm=(E0, E1),
        tol_tp=5e-5,
        tol_cp=5e-3,
    )

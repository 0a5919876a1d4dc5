import itertools
from typing import Iterable, Optional, Sequence

from src.channels import PauliTransferMatrix, ptm_from_unitary
from src.exceptions import ConfigError
from src.models import gate_unitary, Z, X90, CNOT, IDLE
from .device import ChannelConstructor, DeviceModel, gst_alphabet
from .gst_ourense import OURENSE_EDGES, builtin_gst_ourense
from .io import load_device
from .trapped_ion import TrappedIonParams, builtin_trapped_ion


def builtin_ideal(n: int, alphabet: str = 'gst',
                  edges: Optional[Iterable[Sequence[int]]] = None) -> DeviceModel:
    """Noise-free device; fully connected unless `edges` is given."""
    if alphabet == 'trapped_ion':
        d = builtin_trapped_ion(TrappedIonParams.zero(), n)
        d.name = 'ideal-trapped-ion'
        if edges is not None:
            d.edges = tuple(tuple(e) for e in edges)
            d.__post_init__()
        return d
    if alphabet != 'gst':
        raise ValueError(f"unknown alphabet {alphabet!r}")
    if edges is None:
        edges = itertools.combinations(range(n), 2)
    idle = PauliTransferMatrix.identity(1)
    return DeviceModel(
        name='ideal',
        n_qubits=n,
        edges=tuple(tuple(e) for e in edges),
        alphabet=gst_alphabet(),
        channels={
            Z: ChannelConstructor('ideal', {'gate': Z}),
            X90: ptm_from_unitary(gate_unitary(X90)),
            CNOT: ptm_from_unitary(gate_unitary(CNOT)),
            IDLE: idle,
        },
        idle_ptm=idle,
    )


def ideal_counterpart(d: DeviceModel) -> DeviceModel:
    """Noise-free device with the same alphabet family and connectivity."""
    family = 'trapped_ion' if 'XX' in d.alphabet else 'gst'
    return builtin_ideal(d.n_qubits, family, d.edges)


def resolve_device(spec: str, n_qubits: Optional[int] = None) -> DeviceModel:
    """`builtin:gst-ourense`, `builtin:trapped-ion`, `builtin:ideal` or `file:PATH`."""
    kind, _, value = spec.partition(':')
    if kind == 'file' and value:
        return load_device(value)
    if kind == 'builtin':
        if value == 'gst-ourense':
            return builtin_gst_ourense()
        if value == 'trapped-ion':
            return builtin_trapped_ion(TrappedIonParams(), n_qubits or 3)
        if value == 'ideal':
            # noise-free twin of the Ourense layout
            return builtin_ideal(5, 'gst', OURENSE_EDGES)
    raise ConfigError('device', f"unknown device {spec!r}")

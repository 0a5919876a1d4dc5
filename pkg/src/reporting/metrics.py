import numpy as np
import pandas as pd
from typing import Optional

from src.channels import average_gate_infidelity
from src.devices import DeviceModel, PUBLISHED_METRICS, channel_for
from src.models import GateInstance, gate_unitary
from src.simulator import state_infidelity

_KET0 = np.array([[1, 0], [0, 0]], dtype=complex)
_KET1 = np.array([[0, 0], [0, 1]], dtype=complex)

# parametric gates are characterized at this angle
METRIC_ANGLE = np.pi / 2


def _published(device: DeviceModel, key: str) -> Optional[float]:
    if device.name.startswith('gst-ourense'):
        return PUBLISHED_METRICS.get(key)
    return None


def device_metrics(device: DeviceModel) -> pd.DataFrame:
    """
    Error metric of every native operation and SPAM element.

    Gates report the average gate infidelity of their noisy channel against the
    ideal unitary, the prepared state its infidelity with |0>, and each POVM
    effect 1 - <k|E_k|k>.
    """
    rows = []
    for name in sorted(device.alphabet):
        gdef = device.alphabet[name]
        angle = METRIC_ANGLE if gdef.parametric else None
        qubits = tuple(range(gdef.arity))
        channel = channel_for(device, GateInstance(name, qubits, angle))
        label = name if angle is None else f"{name}(pi/2)"
        rows.append({
            'element': label,
            'metric': 'average_gate_infidelity',
            'value': average_gate_infidelity(channel, gate_unitary(name, angle)),
            'published': _published(device, name),
        })

    rows.append({
        'element': 'rho0',
        'metric': 'state_infidelity',
        'value': state_infidelity(device.prep_density, _KET0),
        'published': _published(device, 'rho0'),
    })
    E0, E1 = device.readout_effects()
    rows.append({
        'element': 'P0',
        'metric': '1 - <0|E0|0>',
        'value': float(1.0 - np.real(E0[0, 0])),
        'published': _published(device, 'E0'),
    })
    rows.append({
        'element': 'P1',
        'metric': '1 - <1|E1|1>',
        'value': float(1.0 - np.real(E1[1, 1])),
        'published': _published(device, 'E1'),
    })
    return pd.DataFrame(rows)

"""
Device JSON files.

Schema: {name, n_qubits, edges: [[i, j]], gates: [{name, arity, parametric,
duration, ptm | constructor: {kind, params}}], idle_ptm, prep_density,
povm: {E0, E1}, tolerances: {tp, cp}}. PTMs are row-major real arrays in the
pauli-lex, qubit0-MSB basis; operators are row-major [re, im] pairs.
"""
from pathlib import Path
from typing import Union

from src.channels import PauliTransferMatrix
from src.exceptions import ParseError
from src.models import GateDef
from src.utils.data_loader import (
    decode_complex_matrix, decode_real_matrix, encode_complex_matrix, encode_real_matrix,
    load_json, save_json,
)
from .device import ChannelConstructor, DeviceModel, validate_device

PTM_BASIS = 'pauli-lex, qubit0-MSB'


def device_to_dict(d: DeviceModel) -> dict:
    gates = []
    for name, gdef in d.alphabet.items():
        entry = gdef.to_dict()
        ch = d.channels[name]
        if isinstance(ch, PauliTransferMatrix):
            entry['ptm'] = {'n_qubits': ch.n_qubits, 'basis': PTM_BASIS,
                            'matrix': encode_real_matrix(ch.matrix)}
        else:
            entry['constructor'] = ch.to_dict()
        gates.append(entry)
    return {
        'name': d.name,
        'n_qubits': d.n_qubits,
        'edges': [list(e) for e in d.edges],
        'gates': gates,
        'idle_ptm': {'n_qubits': 1, 'basis': PTM_BASIS,
                     'matrix': encode_real_matrix(d.idle_ptm.matrix)},
        'prep_density': encode_complex_matrix(d.prep_density),
        'povm': {'E0': encode_complex_matrix(d.povm[0]), 'E1': encode_complex_matrix(d.povm[1])},
        'tolerances': {'tp': d.tol_tp, 'cp': d.tol_cp},
    }


def _decode_ptm(data: dict) -> PauliTransferMatrix:
    basis = data.get('basis', PTM_BASIS)
    if basis != PTM_BASIS:
        raise ParseError(f"unsupported PTM basis {basis!r}")
    return PauliTransferMatrix(int(data['n_qubits']), decode_real_matrix(data['matrix']))


def device_from_dict(data: dict) -> DeviceModel:
    try:
        alphabet = {}
        channels = {}
        for entry in data['gates']:
            gdef = GateDef.from_dict(entry)
            alphabet[gdef.name] = gdef
            if 'ptm' in entry:
                channels[gdef.name] = _decode_ptm(entry['ptm'])
            elif 'constructor' in entry:
                channels[gdef.name] = ChannelConstructor.from_dict(entry['constructor'])
            else:
                raise ParseError(f"gate {gdef.name} has neither ptm nor constructor")
        tolerances = data.get('tolerances', {})
        return DeviceModel(
            name=data.get('name', 'device'),
            n_qubits=int(data['n_qubits']),
            edges=tuple(tuple(e) for e in data['edges']),
            alphabet=alphabet,
            channels=channels,
            idle_ptm=_decode_ptm(data['idle_ptm']),
            prep_density=decode_complex_matrix(data['prep_density']),
            povm=(decode_complex_matrix(data['povm']['E0']),
                  decode_complex_matrix(data['povm']['E1'])),
            tol_tp=float(tolerances.get('tp', 5e-5)),
            tol_cp=float(tolerances.get('cp', 5e-3)),
        )
    except (KeyError, TypeError, ValueError) as e:
        if isinstance(e, ParseError):
            raise
        raise ParseError(f"malformed device description: {e!r}")


def load_device(filepath: Union[str, Path]) -> DeviceModel:
    d = device_from_dict(load_json(filepath))
    validate_device(d)
    return d


def save_device(d: DeviceModel, filepath: Union[str, Path]) -> None:
    save_json(device_to_dict(d), filepath)

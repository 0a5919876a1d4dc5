import json
import numpy as np
from pathlib import Path
from typing import Any, Union

from src.exceptions import ParseError


def encode_real_matrix(m: np.ndarray) -> list:
    return np.asarray(m, dtype=float).tolist()


def decode_real_matrix(data: Any) -> np.ndarray:
    try:
        return np.asarray(data, dtype=float)
    except (TypeError, ValueError) as e:
        raise ParseError(f"expected a real matrix: {e}")


def encode_complex_matrix(m: np.ndarray) -> list:
    """Row-major nested list of [re, im] pairs."""
    m = np.asarray(m, dtype=complex)
    return np.stack([m.real, m.imag], axis=-1).tolist()


def decode_complex_matrix(data: Any) -> np.ndarray:
    try:
        arr = np.asarray(data, dtype=float)
    except (TypeError, ValueError) as e:
        raise ParseError(f"expected a complex matrix: {e}")
    if arr.ndim == 0 or arr.shape[-1] != 2:
        raise ParseError("complex entries must be [re, im] pairs")
    return arr[..., 0] + 1j * arr[..., 1]


def load_json(filepath: Union[str, Path]) -> dict:
    try:
        with open(filepath) as f:
            return json.load(f)
    except json.JSONDecodeError as e:
        raise ParseError(f"{filepath}: {e}")


def save_json(data: dict, filepath: Union[str, Path]) -> None:
    path = Path(filepath)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, 'w') as f:
        json.dump(data, f, indent=2, sort_keys=True)

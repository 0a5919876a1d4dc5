import numpy as np
from dataclasses import asdict, dataclass, field, fields
from typing import Dict, Optional

from src.exceptions import ConfigError

MOVE_KINDS = ('insert_1q', 'insert_2q', 'remove', 'swap')
INNER_METHODS = ('mads', 'coordinate')


@dataclass
class MeshSearchSettings:
    initial_mesh: float = 0.5
    contraction: float = 0.5
    expansion: float = 2.0
    max_mesh: float = np.pi
    max_evaluations: int = 60
    tolerance: float = 1e-3
    method: str = 'mads'

    def validate(self, prefix: str = 'mesh') -> None:
        if self.initial_mesh <= 0:
            raise ConfigError(f"{prefix}.initial_mesh", "must be > 0")
        if not 0 < self.contraction < 1:
            raise ConfigError(f"{prefix}.contraction", "must be in (0, 1)")
        if self.expansion <= 1:
            raise ConfigError(f"{prefix}.expansion", "must be > 1")
        if self.max_evaluations < 1:
            raise ConfigError(f"{prefix}.max_evaluations", "must be >= 1")
        if self.tolerance <= 0:
            raise ConfigError(f"{prefix}.tolerance", "must be > 0")
        if self.method not in INNER_METHODS:
            raise ConfigError(f"{prefix}.method", f"must be one of {INNER_METHODS}")

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, data: dict, prefix: str = 'mesh') -> 'MeshSearchSettings':
        return cls(**_known_fields(cls, data, prefix))


def _default_weights() -> Dict[str, float]:
    return {'insert_1q': 0.3, 'insert_2q': 0.2, 'remove': 0.3, 'swap': 0.2}


@dataclass
class OptimizerConfig:
    max_iterations: int = 1000
    restart_count: int = 8
    initial_temperature: float = 0.05
    decay: float = 0.995
    move_weights: Dict[str, float] = field(default_factory=_default_weights)
    simplify_period: int = 10
    min_initial_length: int = 4
    max_initial_length: int = 24
    mesh: MeshSearchSettings = field(default_factory=MeshSearchSettings)
    seed: int = 0
    budget_seconds: Optional[float] = None

    def validate(self, prefix: str = 'optimizer') -> None:
        if self.max_iterations < 0:
            raise ConfigError(f"{prefix}.max_iterations", "must be >= 0")
        if self.restart_count < 1:
            raise ConfigError(f"{prefix}.restart_count", "must be >= 1")
        if self.initial_temperature <= 0:
            raise ConfigError(f"{prefix}.initial_temperature", "must be > 0")
        if not 0 < self.decay <= 1:
            raise ConfigError(f"{prefix}.decay", "must be in (0, 1]")
        unknown = set(self.move_weights) - set(MOVE_KINDS)
        if unknown:
            raise ConfigError(f"{prefix}.move_weights", f"unknown moves {sorted(unknown)}")
        if any(w < 0 for w in self.move_weights.values()):
            raise ConfigError(f"{prefix}.move_weights", "weights must be >= 0")
        if abs(sum(self.move_weights.values()) - 1.0) > 1e-9:
            raise ConfigError(f"{prefix}.move_weights", "weights must sum to 1")
        if self.simplify_period < 0:
            raise ConfigError(f"{prefix}.simplify_period", "must be >= 0")
        if not 0 <= self.min_initial_length <= self.max_initial_length:
            raise ConfigError(f"{prefix}.min_initial_length", "must be in [0, max_initial_length]")
        if self.budget_seconds is not None and self.budget_seconds <= 0:
            raise ConfigError(f"{prefix}.budget_seconds", "must be > 0")
        self.mesh.validate(f"{prefix}.mesh")

    def temperature(self, iteration: int) -> float:
        return self.initial_temperature * self.decay ** iteration

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, data: dict, prefix: str = 'optimizer') -> 'OptimizerConfig':
        values = _known_fields(cls, data, prefix)
        if 'mesh' in values:
            values['mesh'] = MeshSearchSettings.from_dict(values['mesh'], f"{prefix}.mesh")
        if 'move_weights' in values:
            values['move_weights'] = {k: float(v) for k, v in values['move_weights'].items()}
        return cls(**values)


def _known_fields(cls, data: dict, prefix: str) -> dict:
    if not isinstance(data, dict):
        raise ConfigError(prefix, "expected an object")
    names = {f.name for f in fields(cls)}
    for key in data:
        if key not in names:
            raise ConfigError(f"{prefix}.{key}", "unknown field")
    return dict(data)

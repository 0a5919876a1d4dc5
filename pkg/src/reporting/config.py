"""Run configuration: one JSON file with task, device, optimizer, validation and seed sections."""
from dataclasses import dataclass, field, fields
from pathlib import Path
from typing import Optional, Tuple, Union

from src.exceptions import ConfigError, ParseError, SampleSpecError
from src.optimizer import OptimizerConfig
from src.simulator import FIDELITY_METHODS
from src.utils import load_json

TASK_KINDS = ('overlap', 'w_state', 'qft')
RUN_MODES = ('optimize', 'baseline')
SAMPLE_KINDS = ('overlap', 'haar_pure')


@dataclass(frozen=True)
class SampleSpec:
    """Seeded description of a random state set: HS-mixed overlap pairs or Haar pure states."""
    kind: str = 'overlap'
    count: int = 1000
    seed: int = 1

    def to_dict(self) -> dict:
        return {'kind': self.kind, 'count': self.count, 'seed': self.seed}


def parse_sample_spec(spec) -> SampleSpec:
    if isinstance(spec, SampleSpec):
        return spec
    if not isinstance(spec, dict):
        raise SampleSpecError(f"sample spec must be an object, got {type(spec).__name__}")
    unknown = set(spec) - {'kind', 'count', 'seed'}
    if unknown:
        raise SampleSpecError(f"unknown sample spec keys {sorted(unknown)}")
    kind = spec.get('kind', 'overlap')
    if kind not in SAMPLE_KINDS:
        raise SampleSpecError(f"sample kind must be one of {SAMPLE_KINDS}, got {kind!r}")
    count, seed = spec.get('count', 1000), spec.get('seed', 1)
    if not isinstance(count, int) or isinstance(count, bool) or count < 1:
        raise SampleSpecError(f"count must be a positive integer, got {count!r}")
    if not isinstance(seed, int) or isinstance(seed, bool):
        raise SampleSpecError(f"seed must be an integer, got {seed!r}")
    return SampleSpec(kind, count, seed)


@dataclass
class TaskSection:
    kind: str = 'w_state'
    n_qubits: int = 4
    # physical device qubits the task runs on; defaults to 0..n-1
    physical_qubits: Optional[Tuple[int, ...]] = None
    training: dict = field(default_factory=lambda: {'kind': 'overlap', 'count': 200, 'seed': 0})
    fidelity_method: str = 'choi'
    reduction: str = 'mean'

    def validate(self, prefix: str = 'task') -> None:
        if self.kind not in TASK_KINDS:
            raise ConfigError(f"{prefix}.kind", f"unknown task kind {self.kind!r}; use one of {TASK_KINDS}")
        if self.kind == 'overlap' and self.n_qubits != 3:
            raise ConfigError(f"{prefix}.n_qubits", "overlap estimation uses 3 qubits")
        if self.n_qubits < 1:
            raise ConfigError(f"{prefix}.n_qubits", "must be >= 1")
        if self.physical_qubits is not None and len(self.physical_qubits) != self.n_qubits:
            raise ConfigError(f"{prefix}.physical_qubits", f"expected {self.n_qubits} entries")
        if self.reduction not in ('mean', 'max'):
            raise ConfigError(f"{prefix}.reduction", "must be 'mean' or 'max'")
        if self.fidelity_method not in FIDELITY_METHODS:
            raise ConfigError(f"{prefix}.fidelity_method", f"must be one of {FIDELITY_METHODS}")
        try:
            parse_sample_spec(self.training)
        except SampleSpecError as e:
            raise ConfigError(f"{prefix}.training", str(e))

    def qubits(self) -> Tuple[int, ...]:
        if self.physical_qubits is None:
            return tuple(range(self.n_qubits))
        return tuple(self.physical_qubits)

    def to_dict(self) -> dict:
        return {
            'kind': self.kind,
            'n_qubits': self.n_qubits,
            'physical_qubits': list(self.physical_qubits) if self.physical_qubits is not None else None,
            'training': dict(self.training),
            'fidelity_method': self.fidelity_method,
            'reduction': self.reduction,
        }

    @classmethod
    def from_dict(cls, data: dict, prefix: str = 'task') -> 'TaskSection':
        values = _known_fields(cls, data, prefix)
        if values.get('physical_qubits') is not None:
            values['physical_qubits'] = tuple(int(q) for q in values['physical_qubits'])
        return cls(**values)


@dataclass
class ValidationSection:
    enabled: bool = True
    sample: dict = field(default_factory=lambda: {'kind': 'overlap', 'count': 1000, 'seed': 1})
    compare_baseline: bool = True

    def validate(self, prefix: str = 'validation') -> None:
        try:
            parse_sample_spec(self.sample)
        except SampleSpecError as e:
            raise ConfigError(f"{prefix}.sample", str(e))

    def to_dict(self) -> dict:
        return {'enabled': self.enabled, 'sample': dict(self.sample),
                'compare_baseline': self.compare_baseline}

    @classmethod
    def from_dict(cls, data: dict, prefix: str = 'validation') -> 'ValidationSection':
        return cls(**_known_fields(cls, data, prefix))


@dataclass
class RunConfig:
    task: TaskSection = field(default_factory=TaskSection)
    device: str = 'builtin:gst-ourense'
    optimizer: OptimizerConfig = field(default_factory=OptimizerConfig)
    validation: ValidationSection = field(default_factory=ValidationSection)
    seed: int = 0
    mode: str = 'optimize'

    def validate(self) -> None:
        self.task.validate('task')
        if not isinstance(self.device, str) or ':' not in self.device:
            raise ConfigError('device', "expected 'builtin:NAME' or 'file:PATH'")
        self.optimizer.validate('optimizer')
        self.validation.validate('validation')
        if (self.task.kind == 'qft' and self.validation.enabled
                and parse_sample_spec(self.validation.sample).kind != 'haar_pure'):
            raise ConfigError('validation.sample', "unitary validation needs kind 'haar_pure'")
        if not isinstance(self.seed, int) or isinstance(self.seed, bool):
            raise ConfigError('seed', "must be an integer")
        if self.mode not in RUN_MODES:
            raise ConfigError('mode', f"must be one of {RUN_MODES}")

    def to_dict(self) -> dict:
        return {
            'task': self.task.to_dict(),
            'device': self.device,
            'optimizer': self.optimizer.to_dict(),
            'validation': self.validation.to_dict(),
            'seed': self.seed,
            'mode': self.mode,
        }

    @classmethod
    def from_dict(cls, data: dict) -> 'RunConfig':
        values = _known_fields(cls, data, 'config')
        if 'task' in values:
            values['task'] = TaskSection.from_dict(values['task'], 'task')
        if 'optimizer' in values:
            values['optimizer'] = OptimizerConfig.from_dict(values['optimizer'], 'optimizer')
        if 'validation' in values:
            values['validation'] = ValidationSection.from_dict(values['validation'], 'validation')
        try:
            config = cls(**values)
        except TypeError as e:
            raise ConfigError('config', str(e))
        config.validate()
        return config


def _known_fields(cls, data: dict, prefix: str) -> dict:
    if not isinstance(data, dict):
        raise ConfigError(prefix, "expected an object")
    names = {f.name for f in fields(cls)}
    for key in data:
        if key not in names:
            path = key if prefix == 'config' else f"{prefix}.{key}"
            raise ConfigError(path, "unknown field")
    return dict(data)


def load_config(filepath: Union[str, Path]) -> RunConfig:
    try:
        data = load_json(filepath)
    except (ParseError, OSError) as e:
        raise ConfigError('config', str(e))
    return RunConfig.from_dict(data)

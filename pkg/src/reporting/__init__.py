from .logging_setup import setup_logging, LOG_FORMAT
from .config import (
    RunConfig,
    TaskSection,
    ValidationSection,
    SampleSpec,
    parse_sample_spec,
    load_config,
    TASK_KINDS,
    RUN_MODES,
)
from .metrics import device_metrics
from .validation import validation_report, overlap_report, unitary_report, win_rate
from .runner import run_task, run_baseline, build_task, task_device, baseline_for, fidelity_or_metric

#!/usr/bin/env python3
"""
Noise-aware circuit compiler driver.

Optimizes circuits for a configured task on a device model, reproduces the
textbook baselines, validates circuits on random inputs and prints device
error metrics.
"""

import argparse
import json
import logging
import sys
from pathlib import Path

import pandas as pd

# add src to path
sys.path.insert(0, '.')

from src.baselines import BASELINES
from src.circuits import load_circuit
from src.devices import resolve_device
from src.exceptions import CompilerError
from src.reporting import (
    RunConfig, build_task, device_metrics, load_config, run_baseline, run_task, setup_logging,
    task_device, validation_report,
)
from src.models import OE, UC

logger = logging.getLogger('run_compiler')


def _load(args) -> RunConfig:
    config = load_config(args.config) if args.config else RunConfig()
    if args.seed is not None:
        config.seed = args.seed
    if args.budget_seconds is not None:
        config.optimizer.budget_seconds = args.budget_seconds
    if args.device is not None:
        config.device = args.device
    config.validate()
    return config


def cmd_optimize(args) -> None:
    config = _load(args)
    print("=" * 60)
    print("NOISE-AWARE COMPILATION")
    print("=" * 60)
    print(f"[1] Task {config.task.kind} on {config.task.n_qubits} qubits, device {config.device}")
    print(f"    Mode: {config.mode}, seed {config.seed}, "
          f"{config.optimizer.restart_count} restarts x {config.optimizer.max_iterations} iterations")
    print()
    print("[2] Running...")
    summary = run_task(config, args.out)
    print(f"    Best cost:          {summary['best_cost']:.6f}")
    print(f"    Fidelity or metric: {summary['fidelity_or_metric']:.6f}")
    print(f"    Evaluations:        {summary['n_evals']}")
    print(f"    Wall time:          {summary['wall_ms'] / 1000:.1f}s ({summary['termination_reason']})")
    print()
    print(f"[3] Artifacts in {args.out}/")


def cmd_baseline(args) -> None:
    device = resolve_device(args.device or 'builtin:gst-ourense')
    summary = run_baseline(args.name, device, args.out)
    published = summary['published']
    print(f"{summary['baseline']} on {summary['device']}: {summary['metric']} = {summary['value']:.4f}"
          + (f" (published {published})" if published is not None else ""))
    print(f"    best permutation {summary['permutation']}, "
          f"{summary['gate_count']} gates, {summary['cnot_count']} CNOTs")


def cmd_validate(args) -> None:
    config = _load(args)
    device = task_device(config.task, resolve_device(config.device, config.task.n_qubits))
    task = build_task(config.task)
    if task.kind not in (OE, UC):
        raise CompilerError(f"validation covers overlap and unitary tasks, not {task.kind}")
    circuits = {Path(p).stem: load_circuit(p) for p in args.circuit}
    target = task.target_unitary if task.kind == UC else None
    report = validation_report(circuits, device, config.validation.sample, target)
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    report.to_csv(out / 'validation.csv', index=False)

    column = 'error' if target is None else 'infidelity'
    for name in circuits:
        print(f"{name}: mean {column} {report[f'{column}_{name}'].mean():.6f}")


def cmd_metrics(args) -> None:
    device = resolve_device(args.device or 'builtin:gst-ourense')
    df = device_metrics(device)
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    df.to_csv(out / 'metrics.csv', index=False)
    with pd.option_context('display.float_format', '{:.4g}'.format):
        print(df.to_string(index=False))


def cmd_defaults(args) -> None:
    print(json.dumps(RunConfig().to_dict(), indent=2, sort_keys=True))


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", type=str, default=None)
    common.add_argument("--seed", type=int, default=None)
    common.add_argument("--budget-seconds", type=float, default=None)
    common.add_argument("--out", type=str, default="results")
    common.add_argument("--device", type=str, default=None,
                        help="builtin:gst-ourense | builtin:trapped-ion | builtin:ideal | file:PATH")
    common.add_argument("--verbose", action="store_true")

    ap = argparse.ArgumentParser(description=__doc__.strip().splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("optimize", parents=[common])
    p.set_defaults(func=cmd_optimize)

    p = sub.add_parser("baseline", parents=[common])
    p.add_argument("name", choices=BASELINES)
    p.set_defaults(func=cmd_baseline)

    p = sub.add_parser("validate", parents=[common])
    p.add_argument("--circuit", action="append", required=True)
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("metrics", parents=[common])
    p.set_defaults(func=cmd_metrics)

    p = sub.add_parser("defaults", parents=[common])
    p.set_defaults(func=cmd_defaults)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    setup_logging(logging.DEBUG if args.verbose else logging.INFO)
    try:
        args.func(args)
    except CompilerError as e:
        logger.error("%s", e)
        return 1
    return 0


if __name__ == '__main__':
    sys.exit(main())

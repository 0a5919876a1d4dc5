"""
Plain-text circuit format.

One gate per line, `NAME q0 [q1] [angle]`, `#` starts a comment. An optional
`QUBITS n` line fixes the register size; otherwise it is the largest qubit
index plus one.
"""
from pathlib import Path
from typing import List, Optional, Union

from src.exceptions import ParseError
from src.models import Circuit, GateInstance, PARAMETRIC_GATES, TWO_QUBIT_GATES, IDLE, X90, CNOT

KNOWN_GATES = PARAMETRIC_GATES | TWO_QUBIT_GATES | {IDLE, X90, CNOT}


def read_circuit(text: str, n_qubits: Optional[int] = None) -> Circuit:
    gates: List[GateInstance] = []
    declared = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split('#', 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        name = tokens[0]
        try:
            if name.upper() == 'QUBITS':
                declared = int(tokens[1])
                continue
            if name not in KNOWN_GATES:
                raise ParseError(f"line {lineno}: unknown gate {name!r}")
            arity = 2 if name in TWO_QUBIT_GATES else 1
            expected = arity + (1 if name in PARAMETRIC_GATES else 0)
            if len(tokens) - 1 != expected:
                raise ParseError(f"line {lineno}: {name} takes {expected} arguments")
            qubits = tuple(int(t) for t in tokens[1:1 + arity])
            angle = float(tokens[1 + arity]) if name in PARAMETRIC_GATES else None
            gates.append(GateInstance(name, qubits, angle))
        except (IndexError, ValueError) as e:
            if isinstance(e, ParseError):
                raise
            raise ParseError(f"line {lineno}: {e}")

    if n_qubits is None:
        n_qubits = declared
    if n_qubits is None:
        n_qubits = max((max(g.qubits) for g in gates), default=-1) + 1
    return Circuit(n_qubits, tuple(gates))


def write_circuit(c: Circuit, header: Optional[str] = None) -> str:
    lines = []
    if header:
        lines.extend(f"# {h}" for h in header.splitlines())
    lines.append(f"QUBITS {c.n_qubits}")
    lines.extend(str(g) for g in c.gates)
    return '\n'.join(lines) + '\n'


def load_circuit(filepath: Union[str, Path]) -> Circuit:
    return read_circuit(Path(filepath).read_text())


def save_circuit(c: Circuit, filepath: Union[str, Path], header: Optional[str] = None) -> None:
    path = Path(filepath)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(write_circuit(c, header))

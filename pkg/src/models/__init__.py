from .gate import (
    GateDef,
    GateInstance,
    gate_unitary,
    gates_commute,
    qubit_role,
    Z, X90, CNOT, IDLE, RX, RY, RZ, XX,
    PARAMETRIC_GATES,
    TWO_QUBIT_GATES,
    MERGEABLE_ROTATIONS,
)
from .circuit import Circuit, Slot, Layer, LayeredCircuit
from .task import Task, TrainingPair, TrainingSet, OE, SP, UC, TASK_KINDS

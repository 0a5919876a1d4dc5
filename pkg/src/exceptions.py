from typing import Optional


class CompilerError(Exception):
    """Base class for every error raised by the compiler."""


class CircuitError(CompilerError, ValueError):
    """A gate instance is not valid on a device. `index` is the position in the circuit."""

    def __init__(self, message: str, index: Optional[int] = None):
        self.index = index
        if index is not None:
            message = f"gate {index}: {message}"
        super().__init__(message)


class UnknownGate(CircuitError):
    pass


class IllegalEdge(CircuitError):
    pass


class BadQubitIndex(CircuitError):
    pass


class BadPermutation(CompilerError, ValueError):
    pass


class TooLarge(CompilerError, ValueError):
    pass


class NotUnitary(CompilerError, ValueError):
    pass


class BadTargets(CompilerError, ValueError):
    pass


class SizeMismatch(CompilerError, ValueError):
    pass


class NotHermitian(CompilerError, ValueError):
    pass


class ParseError(CompilerError, ValueError):
    pass


class InvariantViolation(CompilerError, ValueError):

    def __init__(self, detail: str):
        self.detail = detail
        super().__init__(detail)


class BadParams(CompilerError, ValueError):
    pass


class DimensionMismatch(CompilerError, ValueError):
    pass


class BadQubit(CompilerError, ValueError):
    pass


class BadMethod(CompilerError, ValueError):
    pass


class TaskMismatch(CompilerError, ValueError):
    pass


class BadN(CompilerError, ValueError):
    pass


class ConfigError(CompilerError, ValueError):
    """Invalid run configuration. `field_path` is the dotted path of the bad entry."""

    def __init__(self, field_path: str, message: str):
        self.field_path = field_path
        super().__init__(f"{field_path}: {message}")


class SampleSpecError(CompilerError, ValueError):
    pass


class BudgetExhausted(CompilerError):
    """Wall-clock budget ran out. The best result found so far is attached."""

    def __init__(self, message: str, result=None):
        self.result = result
        super().__init__(message)

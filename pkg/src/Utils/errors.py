# errors.py
from typing import TYPE_CHECKING, List, Optional, Sequence, Tuple

from rich.console import Console

if TYPE_CHECKING:
    from .model import ValidationError

# stderr only: stdout carries the reports (and JSON must stay clean)
console = Console(stderr=True)
_errors_detected = 0  # global error counter


def error(message, where=None):
    """
    Print a formatted error message.
    - message: error text
    - where: optional location (file name, structure id), None by default
    """
    global _errors_detected
    if where:
        console.print(f"[red]Error in {where}: {message}[/red]")
    else:
        console.print(f"[red]Error: {message}[/red]")
    _errors_detected += 1


def get_error_count():
    """ Returns the number of errors detected. """
    return _errors_detected


def reset_errors():
    """ Resets the error counter. """
    global _errors_detected
    _errors_detected = 0


def warning(message, where=None):
    """
    Print a formatted warning message.
    - message: warning text
    - where: optional location
    """
    if where:
        console.print(f"[yellow]Warning in {where}: {message}[/yellow]")
    else:
        console.print(f"[yellow]Warning: {message}[/yellow]")


def info(message):
    """ Print a dim progress/info line. """
    console.print(f"[dim]{message}[/dim]")


# =====================================================================
# Exceptions
# =====================================================================

class WorkbenchError(Exception):
    """
    Base of every precondition failure.
    Properties that simply fail are NOT exceptions, they are Verdicts.
    """
    kind = "WorkbenchError"

    def __init__(self, message: str, witness: Sequence[int] = ()):
        self.witness: Tuple[int, ...] = tuple(int(w) for w in witness)
        if self.witness:
            message += f" (witness {self.witness})"
        super().__init__(message)


class StructureInvalid(WorkbenchError):
    """
    Raised by the loader when a raw structure breaks one or more invariants.
    Keeps every ValidationError found, not just the first.
    """
    kind = "StructureInvalid"

    def __init__(self, errors: List["ValidationError"], name: str = ""):
        self.errors = list(errors)
        self.name = name
        kinds = ", ".join(e.kind for e in self.errors)
        label = f"'{name}' " if name else ""
        super().__init__(f"Structure {label}is invalid: {kinds}")


class SizeBoundError(WorkbenchError):
    kind = "SizeBound"

    def __init__(self, what: str, size: int, bound: int):
        self.size = size
        self.bound = bound
        super().__init__(f"{what} has size {size}, bound is {bound}")


class UnknownTemplate(WorkbenchError):
    kind = "UnknownTemplate"


class NotIdempotentOrdered(WorkbenchError):
    kind = "NotIdempotentOrdered"


class HypothesisNotMet(WorkbenchError):
    kind = "HypothesisNotMet"


class InternalCheckFailed(WorkbenchError):
    """ A claimed identity failed on a concrete instance """
    kind = "InternalCheckFailed"


class NotProductClosed(WorkbenchError):
    kind = "NotProductClosed"


class NotSemilatticeCongruence(WorkbenchError):
    kind = "NotSemilatticeCongruence"


class ClassNotClosed(WorkbenchError):
    kind = "ClassNotClosed"


class NotAHomomorphism(WorkbenchError):
    kind = "NotAHomomorphism"


class JoinMissing(WorkbenchError):
    """ witness = sorted members of the subset with no least upper bound """
    kind = "JoinMissing"


def describe(exc: Optional[BaseException]) -> str:
    """ One-line rendering of an exception for reports """
    if isinstance(exc, WorkbenchError):
        return f"{exc.kind}: {exc}"
    return f"{type(exc).__name__}: {exc}"

"""Exception types shared across the library."""
from __future__ import annotations


class ModalQError(Exception):
    """Base class for every library-specific error."""


class MixedFieldError(ModalQError, ValueError):
    """Values from different finite fields were combined."""


class DimensionMismatchError(ModalQError, ValueError):
    """Register sizes (or oracle arity versus register size) disagree."""


class ZeroVectorError(ModalQError, ValueError):
    """The zero vector appeared where a valid state is required."""


class RegisterTooLargeError(ModalQError, ValueError):
    """Requested register exceeds the supported qubit count."""


class TooManyVariablesError(ModalQError, ValueError):
    """Boolean function arity exceeds the supported variable count."""


class NonInvertibleGateError(ModalQError, ValueError):
    """A singular map was used where evolution requires invertibility."""


class ControlInTargetsError(ModalQError, ValueError):
    """The fan-out control wire was listed among its own targets."""


class UnsupportedFieldError(ModalQError, ValueError):
    """The operation is only defined over GF(2)."""


class PromiseViolatedError(ModalQError):
    """The input function has more than one satisfying assignment."""

    def __init__(self, sat_count: int):
        super().__init__(
            f"promise violated: {sat_count} satisfying assignments, expected 0 or 1"
        )
        self.sat_count = sat_count


class InternalContradictionError(ModalQError):
    """The final support mixed index 0 with other indices.

    Impossible for a promise-respecting input, so this signals either an
    implementation bug or a promise-violating function run with the promise
    check disabled.  The raw support is attached; no verdict is offered.
    """

    def __init__(self, support: list[int]):
        super().__init__(
            "final support mixes the all-zeros index with others: "
            f"{list(support)!r}; refusing to name a verdict"
        )
        self.support = list(support)

"""Single-qubit linear maps over GF(p) and their action inside a register.

A `Gate2` is the 2x2 matrix [[a, b], [c, d]]; column k is the image of
basis vector |k⟩, so (α, β) maps to (aα + bβ, cα + dβ).  Over GF(2) there
are 16 such maps and exactly 6 invertible ones, which permute the three
one-qubit states.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterable, Sequence

from .errors import (
    ControlInTargetsError,
    MixedFieldError,
    NonInvertibleGateError,
    UnsupportedFieldError,
)
from .field import GF2, FieldSpec
from .state import State, Vector


@dataclass(frozen=True)
class Gate2:
    """A 2x2 matrix over GF(p), stored as residues."""

    field: FieldSpec
    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        p = self.field.p
        for e in (self.a, self.b, self.c, self.d):
            if not isinstance(e, int) or not 0 <= e < p:
                raise ValueError(f"entry {e!r} is not a residue modulo {p}")

    @property
    def det(self) -> int:
        return (self.a * self.d - self.b * self.c) % self.field.p

    @property
    def is_invertible(self) -> bool:
        return self.det != 0

    def compose(self, other: Gate2) -> Gate2:
        """Matrix product self @ other: `other` acts first."""
        if self.field != other.field:
            raise MixedFieldError("cannot compose gates over different fields")
        p = self.field.p
        return Gate2(
            self.field,
            (self.a * other.a + self.b * other.c) % p,
            (self.a * other.b + self.b * other.d) % p,
            (self.c * other.a + self.d * other.c) % p,
            (self.c * other.b + self.d * other.d) % p,
        )

    def inverse(self) -> Gate2:
        det = self.det
        if det == 0:
            raise NonInvertibleGateError(f"{self} has determinant 0")
        p = self.field.p
        k = pow(det, p - 2, p)
        return Gate2(
            self.field,
            (k * self.d) % p,
            (-k * self.b) % p,
            (-k * self.c) % p,
            (k * self.a) % p,
        )

    def rows(self) -> list[list[int]]:
        return [[self.a, self.b], [self.c, self.d]]

    def __str__(self) -> str:
        return f"[[{self.a},{self.b}],[{self.c},{self.d}]]"


_NAMED = {
    # s swaps |0⟩ and |+⟩ and fixes |1⟩; s_dag swaps |1⟩ and |+⟩ and
    # fixes |0⟩; both are involutions.
    "S": (1, 0, 1, 1),
    "S_DAG": (1, 1, 0, 1),
    "X": (0, 1, 1, 0),
    "I": (1, 0, 0, 1),
}


def named_gate(name: str, field: FieldSpec = GF2) -> Gate2:
    """One of the named GF(2) gates: S, S_DAG, X, I."""
    if field.p != 2:
        raise UnsupportedFieldError(f"named gates are defined over GF(2), not {field!r}")
    try:
        a, b, c, d = _NAMED[name]
    except KeyError:
        raise ValueError(
            f"unknown gate {name!r}; expected one of {sorted(_NAMED)}"
        ) from None
    return Gate2(field, a, b, c, d)


S = named_gate("S")
S_DAG = named_gate("S_DAG")
X = named_gate("X")
I = named_gate("I")


def is_invertible(gate: Gate2) -> bool:
    return gate.is_invertible


def compose(g: Gate2, h: Gate2) -> Gate2:
    return g.compose(h)


def inverse(g: Gate2) -> Gate2:
    return g.inverse()


def _check_wire(q: int, m: int) -> None:
    if not 0 <= q < m:
        raise IndexError(f"wire {q} out of range for {m} qubits")


def _check_field(gate: Gate2, v: Vector) -> None:
    if gate.field != v.field:
        raise MixedFieldError(
            f"gate over {gate.field!r} applied to vector over {v.field!r}"
        )


def apply_single_raw(gate: Gate2, q: int, v: Vector) -> Vector:
    """Apply any 2x2 map, invertible or not, to wire q; result may be zero."""
    _check_field(gate, v)
    _check_wire(q, v.m)
    return v._apply_gate2(v.m - 1 - q, gate.a, gate.b, gate.c, gate.d)


def apply_single(gate: Gate2, q: int, s: State) -> State:
    """Apply an invertible map to wire q of a state.

    Wire 0 is the top wire (highest-order index bit).  Invertibility keeps
    the vector nonzero, so the result is again a state.
    """
    if not gate.is_invertible:
        raise NonInvertibleGateError(
            f"{gate} is singular; evolution requires an invertible map"
        )
    return apply_single_raw(gate, q, s).to_state()


def fanout_cnot(control: int, targets: Iterable[int], s: State) -> State:
    """Flip every target wire's index bit where the control bit is set.

    A basis permutation, hence always invertible.  Duplicate targets are
    collapsed to one flip.
    """
    tlist = list(dict.fromkeys(targets))
    _check_wire(control, s.m)
    for t in tlist:
        _check_wire(t, s.m)
    if control in tlist:
        raise ControlInTargetsError(f"control wire {control} is among the targets")
    if not tlist:
        return s
    bposes = [s.m - 1 - t for t in tlist]
    return s._fanout(s.m - 1 - control, bposes).to_state()


def enumerate_1q_maps(field: FieldSpec = GF2) -> tuple[list[Gate2], list[Gate2]]:
    """All 16 one-qubit maps over GF(2), split (invertible, non-invertible)."""
    if field.p != 2:
        raise UnsupportedFieldError(f"enumeration is defined over GF(2), not {field!r}")
    invertible, singular = [], []
    for a, b, c, d in product(range(2), repeat=4):
        g = Gate2(field, a, b, c, d)
        (invertible if g.is_invertible else singular).append(g)
    return invertible, singular


_STATE_NAMES = {(1, 0): "0", (0, 1): "1", (1, 1): "+"}


def one_qubit_action(gate: Gate2) -> dict[str, str | None]:
    """Where the three GF(2) one-qubit states ("0", "1", "+") go.

    None marks the zero image, which only singular maps produce.
    """
    if gate.field.p != 2:
        raise UnsupportedFieldError("action table is defined over GF(2)")
    table: dict[str, str | None] = {}
    for (alpha, beta), name in _STATE_NAMES.items():
        img = ((gate.a * alpha + gate.b * beta) % 2, (gate.c * alpha + gate.d * beta) % 2)
        table[name] = _STATE_NAMES.get(img)
    return table

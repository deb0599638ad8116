"""Register states over GF(p).

A register of m qubits holds a dimension-2^m coefficient vector over a
prime field.  Basis index bits read left to right as wires top to bottom:
wire 0 is the top wire and the highest-order bit of the index.  A `State`
is a nonzero `Vector`; there is no normalization and no amplitude, so any
nonzero vector is a legal state and states that are scalar multiples of
each other are still distinct.

Measurement picks one index out of the support.  The theory attaches no
distribution to that choice; `measure` makes it reproducible by hashing
the seed together with the state's canonical content.
"""
from __future__ import annotations

import hashlib
from typing import Iterable, Mapping, Sequence, Union

from . import backends
from .backends import MAX_QUBITS
from .errors import (
    DimensionMismatchError,
    MixedFieldError,
    RegisterTooLargeError,
    ZeroVectorError,
)
from .field import GF2, FieldSpec

BasisIndex = int
DEFAULT_BACKEND = "dense"


def _check_m(m: int) -> None:
    if m < 1:
        raise ValueError(f"register needs at least 1 qubit, got {m}")
    if m > MAX_QUBITS:
        raise RegisterTooLargeError(f"register of {m} qubits exceeds limit {MAX_QUBITS}")


class Vector:
    """A dimension-2^m coefficient vector over GF(p); may be zero."""

    __slots__ = ("field", "m", "_data")

    def __init__(self, field: FieldSpec, m: int, data):
        self.field = field
        self.m = m
        self._data = data

    # -- construction ------------------------------------------------

    @staticmethod
    def zero(m: int, *, field: FieldSpec = GF2, backend: str = DEFAULT_BACKEND) -> Vector:
        _check_m(m)
        cls = backends.backend_class(backend, field.p)
        return Vector(field, m, cls.zero(m, field.p))

    # -- inspection --------------------------------------------------

    @property
    def backend(self) -> str:
        return backends.backend_name(self._data)

    def coeff(self, i: BasisIndex) -> int:
        """Coefficient at basis index i, as a plain residue."""
        self._check_index(i)
        return self._data.coeff(i)

    def support(self) -> list[BasisIndex]:
        """Sorted indices with a nonzero coefficient."""
        return self._data.support()

    def items(self) -> list[tuple[BasisIndex, int]]:
        """Sorted (index, coefficient) pairs over the support."""
        return sorted(self._data.items())

    @property
    def is_zero(self) -> bool:
        return self._data.is_zero()

    def _check_index(self, i: BasisIndex) -> None:
        if not 0 <= i < (1 << self.m):
            raise IndexError(f"basis index {i} out of range for {self.m} qubits")

    # -- algebra -----------------------------------------------------

    def _check_compatible(self, other: Vector) -> None:
        if self.field != other.field:
            raise MixedFieldError(
                f"cannot combine vectors over {self.field!r} and {other.field!r}"
            )
        if self.m != other.m:
            raise DimensionMismatchError(
                f"cannot combine {self.m}-qubit and {other.m}-qubit vectors"
            )

    def __add__(self, other: Vector) -> Vector:
        if not isinstance(other, Vector):
            return NotImplemented
        self._check_compatible(other)
        a, b = self._data, other._data
        if type(a) is not type(b):
            b = _convert(b, type(a), self.field.p)
        return Vector(self.field, self.m, a.add(b))

    def tensor(self, other: Vector) -> Vector:
        """Kronecker product; self supplies the high-order index bits."""
        if not isinstance(other, Vector):
            raise TypeError(f"can only tensor vectors, got {type(other).__name__}")
        if self.field != other.field:
            raise MixedFieldError(
                f"cannot tensor vectors over {self.field!r} and {other.field!r}"
            )
        _check_m(self.m + other.m)
        a, b = self._data, other._data
        if type(a) is not type(b):
            b = _convert(b, type(a), self.field.p)
        return Vector(self.field, self.m + other.m, a.tensor(b))

    def to_state(self) -> State:
        """The same vector as a State; rejects zero."""
        if self.is_zero:
            raise ZeroVectorError("the zero vector is not a state")
        return State(self.field, self.m, self._data)

    def to_backend(self, backend: str) -> Vector:
        """The same vector stored under the named backend."""
        cls = backends.backend_class(backend, self.field.p)
        if type(self._data) is cls:
            return self
        out = Vector(self.field, self.m, _convert(self._data, cls, self.field.p))
        return out.to_state() if isinstance(self, State) else out

    # -- equality and rendering ---------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, Vector):
            return NotImplemented
        return (
            self.field == other.field
            and self.m == other.m
            and self.items() == other.items()
        )

    def __hash__(self) -> int:
        return hash((self.field.p, self.m, tuple(self.items())))

    def __str__(self) -> str:
        items = self.items()
        if not items:
            return "0"
        terms = []
        for i, v in items:
            ket = f"|{i:0{self.m}b}⟩"
            terms.append(ket if v == 1 else f"{v}{ket}")
        return " + ".join(terms)

    def __repr__(self) -> str:
        kind = type(self).__name__
        return f"<{kind} m={self.m} {self.field!r} {self.backend} {self}>"

    # -- package-internal kernels (ops/oracle modules call these) -----

    def _apply_gate2(self, bpos: int, a: int, b: int, c: int, d: int) -> Vector:
        return Vector(self.field, self.m, self._data.apply_gate2(bpos, a, b, c, d))

    def _fanout(self, control_bpos: int, target_bposes: Sequence[int]) -> Vector:
        return Vector(self.field, self.m, self._data.fanout(control_bpos, target_bposes))

    def _oracle_toggle(self, table_words) -> Vector:
        return Vector(self.field, self.m, self._data.oracle_toggle(table_words))


class State(Vector):
    """A nonzero Vector: a legal register state."""

    __slots__ = ()

    def tensor(self, other: Vector) -> Vector:
        out = super().tensor(other)
        # nonzero (x) nonzero is nonzero over a field
        return out.to_state() if isinstance(other, State) else out

    def measure(self, seed: int) -> BasisIndex:
        """One observed basis index, chosen from the support.

        The theory says only that some support element is observed, with no
        distribution over them.  For reproducibility this implementation
        derives the pick from (seed, state content): the same seed on equal
        states gives the same index regardless of backend.  Treating the
        choice as uniform over the support is a convention of this
        artifact, not part of the theory.
        """
        sup = self.support()
        h = hashlib.blake2b(digest_size=8)
        h.update(int(seed).to_bytes(8, "little", signed=True))
        h.update(self.field.p.to_bytes(4, "little"))
        h.update(self.m.to_bytes(4, "little"))
        for i, v in self.items():
            h.update(i.to_bytes(4, "little"))
            h.update(v.to_bytes(4, "little"))
        return sup[int.from_bytes(h.digest(), "little") % len(sup)]


def _convert(data, cls, p: int):
    return cls.from_items(data.m, p, data.items())


# -- module-level constructors and helpers ---------------------------


def basis_state(
    m: int,
    i: BasisIndex,
    *,
    field: FieldSpec = GF2,
    backend: str = DEFAULT_BACKEND,
) -> State:
    """The standard basis state |i⟩ of an m-qubit register."""
    _check_m(m)
    if not 0 <= i < (1 << m):
        raise IndexError(f"basis index {i} out of range for {m} qubits")
    cls = backends.backend_class(backend, field.p)
    return State(field, m, cls.from_items(m, field.p, [(i, 1)]))


def from_coeffs(
    m: int,
    coeffs: Union[Mapping[int, int], Sequence[int]],
    *,
    field: FieldSpec = GF2,
    backend: str = DEFAULT_BACKEND,
) -> Vector:
    """A vector from {index: value} or a dense length-2^m value sequence."""
    _check_m(m)
    if isinstance(coeffs, Mapping):
        pairs: Iterable[tuple[int, int]] = coeffs.items()
    else:
        if len(coeffs) != (1 << m):
            raise DimensionMismatchError(
                f"expected {1 << m} coefficients for {m} qubits, got {len(coeffs)}"
            )
        pairs = ((i, v) for i, v in enumerate(coeffs) if v)
    checked = []
    for i, v in pairs:
        if not 0 <= i < (1 << m):
            raise IndexError(f"basis index {i} out of range for {m} qubits")
        checked.append((i, int(v) % field.p))
    cls = backends.backend_class(backend, field.p)
    return Vector(field, m, cls.from_items(m, field.p, checked))


def add_vectors(v: Vector, w: Vector) -> Vector:
    """Coefficient-wise sum; mod-2 cancellation falls out of the field."""
    return v + w


def to_state(v: Vector) -> State:
    return v.to_state()


def tensor(a: Vector, b: Vector) -> Vector:
    return a.tensor(b)


def support(v: Vector) -> list[BasisIndex]:
    return v.support()


def measure(s: State, seed: int) -> BasisIndex:
    return s.measure(seed)

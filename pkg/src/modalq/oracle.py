"""Boolean functions, CNF evaluation, and the XOR-into-the-top-wire black box.

A `BoolFn` is an n-input Boolean function materialized as a packed truth
table: bit x of the table is f(x), where assignment x encodes inputs
(x_1, ..., x_n) with x_1 as the most significant bit.  The black box maps
|y⟩|x⟩ to |y XOR f(x)⟩|x⟩ on an (n+1)-qubit register whose top wire is y.
"""
from __future__ import annotations

from dataclasses import dataclass, field as _dcfield
from typing import Sequence

import numpy as np

from . import backends
from .errors import (
    DimensionMismatchError,
    TooManyVariablesError,
    UnsupportedFieldError,
)
from .state import State

MAX_VARS = backends.MAX_QUBITS


@dataclass(frozen=True, eq=False)
class BoolFn:
    """An n-input Boolean function as a packed truth table."""

    n: int
    table: np.ndarray  # uint64 words; bit x = f(x)

    def __post_init__(self):
        _check_arity(self.n)
        if len(self.table) != backends.word_count(1 << self.n):
            raise ValueError("truth table word count does not match n")

    def __call__(self, x: int) -> int:
        if not 0 <= x < (1 << self.n):
            raise IndexError(f"assignment {x} out of range for {self.n} variables")
        return backends.bit_at(self.table, x)

    def __eq__(self, other) -> bool:
        if not isinstance(other, BoolFn):
            return NotImplemented
        return self.n == other.n and bool(np.array_equal(self.table, other.table))

    def __hash__(self) -> int:
        return hash((self.n, self.table.tobytes()))

    def __repr__(self) -> str:
        if self.n <= 4:
            bits = "".join(str(self(x)) for x in range(1 << self.n))
            return f"BoolFn(n={self.n}, table={bits})"
        return f"BoolFn(n={self.n}, sat_count={count_sat(self)})"


def boolfn_from_table(n: int, bits: Sequence[int]) -> BoolFn:
    """Build f from its 2^n output bits, listed in assignment order."""
    _check_arity(n)
    if len(bits) != (1 << n):
        raise ValueError(f"expected {1 << n} table bits for n={n}, got {len(bits)}")
    arr = np.asarray(bits, dtype=np.uint8)
    if arr.size and not np.isin(arr, (0, 1)).all():
        raise ValueError("table bits must be 0 or 1")
    return BoolFn(n, backends.pack_bits(arr))


def _check_arity(n: int) -> None:
    if n < 1:
        raise ValueError(f"need at least 1 input variable, got {n}")
    if n > MAX_VARS:
        raise TooManyVariablesError(f"n={n} exceeds the {MAX_VARS}-variable limit")


def constant_false(n: int) -> BoolFn:
    _check_arity(n)
    return BoolFn(n, np.zeros(backends.word_count(1 << n), dtype=np.uint64))


def constant_true(n: int) -> BoolFn:
    _check_arity(n)
    return boolfn_from_table(n, np.ones(1 << n, dtype=np.uint8))


def point_function(n: int, a: int) -> BoolFn:
    """The function that is 1 exactly at assignment index a."""
    _check_arity(n)
    if not 0 <= a < (1 << n):
        raise IndexError(f"assignment {a} out of range for {n} variables")
    words = np.zeros(backends.word_count(1 << n), dtype=np.uint64)
    words[a >> 6] = np.uint64(1) << np.uint64(a & 63)
    return BoolFn(n, words)


def random_point_function(n: int, rng: np.random.Generator) -> BoolFn:
    return point_function(n, int(rng.integers(0, 1 << n)))


def count_sat(fn: BoolFn) -> int:
    """Number of satisfying assignments, by popcount over the packed table."""
    return backends.popcount(fn.table)


def satisfying_assignments(fn: BoolFn) -> list[int]:
    """All satisfying assignments in increasing order (materializes 2^n bits)."""
    return np.flatnonzero(backends.unpack_bits(fn.table, 1 << fn.n)).tolist()


@dataclass
class CNF:
    """Clauses over variables 1..num_vars; a negative literal negates."""

    num_vars: int
    clauses: list[list[int]] = _dcfield(default_factory=list)

    def __post_init__(self):
        if self.num_vars < 0:
            raise ValueError(f"num_vars must be nonnegative, got {self.num_vars}")
        for clause in self.clauses:
            for lit in clause:
                if lit == 0:
                    raise ValueError("literal 0 is reserved as the clause terminator")
                if abs(lit) > self.num_vars:
                    raise ValueError(
                        f"literal {lit} references a variable beyond {self.num_vars}"
                    )


_CHUNK = 1 << 16


def boolfn_from_cnf(cnf: CNF) -> BoolFn:
    """Evaluate a CNF over all 2^n assignments into a packed truth table.

    Variable v contributes bit (n - v) of the assignment index, so x_1 is
    the most significant bit.  An empty clause list is constant-true; an
    empty clause is unsatisfiable.
    """
    n = cnf.num_vars
    _check_arity(n)
    size = 1 << n
    words = []
    for start in range(0, size, _CHUNK):
        stop = min(start + _CHUNK, size)
        x = np.arange(start, stop, dtype=np.uint32)
        ok = np.ones(stop - start, dtype=bool)
        for clause in cnf.clauses:
            sat = np.zeros(stop - start, dtype=bool)
            for lit in clause:
                bit = (x >> np.uint32(n - abs(lit))) & np.uint32(1)
                sat |= (bit == 1) if lit > 0 else (bit == 0)
            ok &= sat
        words.append(backends.pack_bits(ok))
    return BoolFn(n, np.concatenate(words))


def apply_oracle(fn: BoolFn, s: State) -> State:
    """|y⟩|x⟩ -> |y XOR f(x)⟩|x⟩ with y on the top wire.

    A basis permutation (its own inverse), so states stay states.
    """
    if s.field.p != 2:
        raise UnsupportedFieldError(f"the black box is defined over GF(2), not {s.field!r}")
    if s.m != fn.n + 1:
        raise DimensionMismatchError(
            f"oracle on {fn.n} inputs needs an {fn.n + 1}-qubit register, got {s.m}"
        )
    return s._oracle_toggle(fn.table).to_state()

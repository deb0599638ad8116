"""Coefficient storage for register states.

Four interchangeable layouts behind one duck-typed interface:

* ``DenseBits``   GF(2), one bit per basis index packed into uint64 words
* ``DenseArray``  GF(p), one integer per basis index
* ``SparseSet``   GF(2), the set of indices carrying a 1 coefficient
* ``SparseMap``   GF(p), {index: nonzero coefficient}

All operations return fresh objects; payloads are never mutated after
construction.  Indices run 0 .. 2^m - 1 and bit position b of an index
corresponds to wire m - 1 - b (wire 0 is the top wire, highest-order bit).
"""
from __future__ import annotations

from typing import Iterable, Iterator

import numpy as np

MAX_QUBITS = 26

# Bit j of _LANE_MASKS[b] is set iff bit b of the lane index j is clear.
_LANE_MASKS = tuple(
    np.uint64(v)
    for v in (
        0x5555555555555555,
        0x3333333333333333,
        0x0F0F0F0F0F0F0F0F,
        0x00FF00FF00FF00FF,
        0x0000FFFF0000FFFF,
        0x00000000FFFFFFFF,
    )
)
_FULL = np.uint64(0xFFFFFFFFFFFFFFFF)
_ONE = np.uint64(1)


def word_count(nbits: int) -> int:
    """Words needed for `nbits` packed bits (nbits is a power of two)."""
    return max(1, nbits >> 6)


def pack_bits(bits: np.ndarray) -> np.ndarray:
    """Pack a 0/1 array into uint64 words, bit i of the result = bits[i]."""
    # The uint8 <-> uint64 views below assume a little-endian host.
    packed = np.packbits(bits.astype(np.uint8, copy=False), bitorder="little")
    buf = np.zeros(word_count(len(bits)) * 8, dtype=np.uint8)
    buf[: len(packed)] = packed
    return buf.view(np.uint64)


def unpack_bits(words: np.ndarray, nbits: int) -> np.ndarray:
    """Inverse of pack_bits: 0/1 uint8 array of length `nbits`."""
    return np.unpackbits(words.view(np.uint8), bitorder="little")[:nbits]


def bit_at(words: np.ndarray, i: int) -> int:
    return int((words[i >> 6] >> np.uint64(i & 63)) & _ONE)


def popcount(words: np.ndarray) -> int:
    return int(np.bitwise_count(words).sum())


class DenseBits:
    """GF(2) coefficients packed one bit per basis index."""

    __slots__ = ("m", "words")
    p = 2

    def __init__(self, m: int, words: np.ndarray):
        self.m = m
        self.words = words

    @classmethod
    def zero(cls, m: int, p: int = 2) -> DenseBits:
        return cls(m, np.zeros(word_count(1 << m), dtype=np.uint64))

    @classmethod
    def from_items(cls, m: int, p: int, items: Iterable[tuple[int, int]]) -> DenseBits:
        words = np.zeros(word_count(1 << m), dtype=np.uint64)
        for i, v in items:
            if v % 2:
                words[i >> 6] ^= _ONE << np.uint64(i & 63)
        return cls(m, words)

    def coeff(self, i: int) -> int:
        return bit_at(self.words, i)

    def is_zero(self) -> bool:
        return not self.words.any()

    def nnz(self) -> int:
        return popcount(self.words)

    def support(self) -> list[int]:
        return np.flatnonzero(unpack_bits(self.words, 1 << self.m)).tolist()

    def items(self) -> Iterator[tuple[int, int]]:
        return ((i, 1) for i in self.support())

    def add(self, other: DenseBits) -> DenseBits:
        return DenseBits(self.m, self.words ^ other.words)

    def equal(self, other: DenseBits) -> bool:
        return self.m == other.m and bool(np.array_equal(self.words, other.words))

    def apply_gate2(self, bpos: int, a: int, b: int, c: int, d: int) -> DenseBits:
        """Transform the coefficient pairs (v0, v1) at indices differing in
        bit `bpos` by the matrix [[a, b], [c, d]] (column k = image of k)."""
        w = self.words
        if bpos < 6:
            lane = _LANE_MASKS[bpos]
            sh = np.uint64(1 << bpos)
            v0 = w & lane
            v1 = (w >> sh) & lane
            zeros = v0 & np.uint64(0)
            n0 = (v0 if a else zeros) ^ (v1 if b else zeros)
            n1 = (v0 if c else zeros) ^ (v1 if d else zeros)
            out = n0 | (n1 << sh)
        else:
            pairs = w.reshape(-1, 2, 1 << (bpos - 6))
            v0 = pairs[:, 0, :]
            v1 = pairs[:, 1, :]
            zeros = v0 & np.uint64(0)
            out = np.empty_like(pairs)
            out[:, 0, :] = (v0 if a else zeros) ^ (v1 if b else zeros)
            out[:, 1, :] = (v0 if c else zeros) ^ (v1 if d else zeros)
            out = out.reshape(-1)
        return DenseBits(self.m, out)

    def _position_mask(self, bpos: int) -> np.ndarray:
        """Packed mask whose bit i is set iff bit `bpos` of index i is set."""
        nwords = len(self.words)
        if bpos < 6:
            return np.full(nwords, ~_LANE_MASKS[bpos], dtype=np.uint64)
        idx = np.arange(nwords, dtype=np.uint64)
        hot = ((idx >> np.uint64(bpos - 6)) & _ONE).astype(bool)
        return np.where(hot, _FULL, np.uint64(0))

    def cnot(self, control_bpos: int, target_bpos: int) -> DenseBits:
        """Swap pairs along `target_bpos` wherever bit `control_bpos` is set."""
        swapped = self.apply_gate2(target_bpos, 0, 1, 1, 0).words
        cmask = self._position_mask(control_bpos)
        return DenseBits(self.m, (self.words & ~cmask) | (swapped & cmask))

    def fanout(self, control_bpos: int, target_bposes: Iterable[int]) -> DenseBits:
        out = self
        for t in target_bposes:
            out = out.cnot(control_bpos, t)
        return out

    def oracle_toggle(self, table_words: np.ndarray) -> DenseBits:
        """Swap the y=0 and y=1 halves at the x positions where the packed
        truth table has a set bit; y is the top (highest-order) index bit."""
        n = self.m - 1
        w = self.words
        if n >= 6:
            half = len(w) // 2
            t = table_words
            keep = ~t
            lo, hi = w[:half], w[half:]
            out = np.concatenate(((lo & keep) | (hi & t), (hi & keep) | (lo & t)))
        else:
            sh = np.uint64(1 << n)
            lowmask = np.uint64((1 << (1 << n)) - 1)
            t = table_words & lowmask
            keep = ~t & lowmask
            lo = w & lowmask
            hi = (w >> sh) & lowmask
            out = ((lo & keep) | (hi & t)) | (((hi & keep) | (lo & t)) << sh)
        return DenseBits(self.m, out)

    def tensor(self, other: DenseBits) -> DenseBits:
        a = unpack_bits(self.words, 1 << self.m)
        b = unpack_bits(other.words, 1 << other.m)
        prod = np.outer(a, b).reshape(-1)
        return DenseBits(self.m + other.m, pack_bits(prod))


class DenseArray:
    """GF(p) coefficients as a full length-2^m integer array."""

    __slots__ = ("m", "p", "arr")

    def __init__(self, m: int, p: int, arr: np.ndarray):
        self.m = m
        self.p = p
        self.arr = arr

    @classmethod
    def zero(cls, m: int, p: int) -> DenseArray:
        return cls(m, p, np.zeros(1 << m, dtype=np.int64))

    @classmethod
    def from_items(cls, m: int, p: int, items: Iterable[tuple[int, int]]) -> DenseArray:
        arr = np.zeros(1 << m, dtype=np.int64)
        for i, v in items:
            arr[i] = (arr[i] + v) % p
        return cls(m, p, arr)

    def coeff(self, i: int) -> int:
        return int(self.arr[i])

    def is_zero(self) -> bool:
        return not self.arr.any()

    def nnz(self) -> int:
        return int(np.count_nonzero(self.arr))

    def support(self) -> list[int]:
        return np.flatnonzero(self.arr).tolist()

    def items(self) -> Iterator[tuple[int, int]]:
        return ((int(i), int(self.arr[i])) for i in np.flatnonzero(self.arr))

    def add(self, other: DenseArray) -> DenseArray:
        return DenseArray(self.m, self.p, (self.arr + other.arr) % self.p)

    def equal(self, other: DenseArray) -> bool:
        return self.m == other.m and bool(np.array_equal(self.arr, other.arr))

    def apply_gate2(self, bpos: int, a: int, b: int, c: int, d: int) -> DenseArray:
        stride = 1 << bpos
        pairs = self.arr.reshape(-1, 2, stride)
        v0 = pairs[:, 0, :]
        v1 = pairs[:, 1, :]
        out = np.empty_like(pairs)
        out[:, 0, :] = (a * v0 + b * v1) % self.p
        out[:, 1, :] = (c * v0 + d * v1) % self.p
        return DenseArray(self.m, self.p, out.reshape(-1))

    def _xor_permute(self, control_bpos: int, xor_mask: int) -> DenseArray:
        # i -> i ^ xor_mask where the control bit is set; an involution, so
        # gathering through the same map inverts it.
        idx = np.arange(1 << self.m)
        hot = ((idx >> control_bpos) & 1) == 1
        src = np.where(hot, idx ^ xor_mask, idx)
        return DenseArray(self.m, self.p, self.arr[src])

    def cnot(self, control_bpos: int, target_bpos: int) -> DenseArray:
        return self._xor_permute(control_bpos, 1 << target_bpos)

    def fanout(self, control_bpos: int, target_bposes: Iterable[int]) -> DenseArray:
        mask = 0
        for t in target_bposes:
            mask |= 1 << t
        return self._xor_permute(control_bpos, mask)

    def tensor(self, other: DenseArray) -> DenseArray:
        prod = np.outer(self.arr, other.arr) % self.p
        return DenseArray(self.m + other.m, self.p, prod.reshape(-1))


def _toggle(s: set[int], i: int) -> None:
    if i in s:
        s.remove(i)
    else:
        s.add(i)


class SparseSet:
    """GF(2) coefficients as the set of indices with coefficient 1.

    Superposition is symmetric difference, which is where mod-2
    cancellation lives in this layout.
    """

    __slots__ = ("m", "indices")
    p = 2

    def __init__(self, m: int, indices: frozenset[int]):
        self.m = m
        self.indices = indices

    @classmethod
    def zero(cls, m: int, p: int = 2) -> SparseSet:
        return cls(m, frozenset())

    @classmethod
    def from_items(cls, m: int, p: int, items: Iterable[tuple[int, int]]) -> SparseSet:
        acc: set[int] = set()
        for i, v in items:
            if v % 2:
                _toggle(acc, i)
        return cls(m, frozenset(acc))

    def coeff(self, i: int) -> int:
        return 1 if i in self.indices else 0

    def is_zero(self) -> bool:
        return not self.indices

    def nnz(self) -> int:
        return len(self.indices)

    def support(self) -> list[int]:
        return sorted(self.indices)

    def items(self) -> Iterator[tuple[int, int]]:
        return ((i, 1) for i in sorted(self.indices))

    def add(self, other: SparseSet) -> SparseSet:
        return SparseSet(self.m, self.indices ^ other.indices)

    def equal(self, other: SparseSet) -> bool:
        return self.m == other.m and self.indices == other.indices

    def apply_gate2(self, bpos: int, a: int, b: int, c: int, d: int) -> SparseSet:
        stride = 1 << bpos
        out: set[int] = set()
        for i in self.indices:
            if i & stride:
                if b:
                    _toggle(out, i ^ stride)
                if d:
                    _toggle(out, i)
            else:
                if a:
                    _toggle(out, i)
                if c:
                    _toggle(out, i | stride)
        return SparseSet(self.m, frozenset(out))

    def cnot(self, control_bpos: int, target_bpos: int) -> SparseSet:
        return self.fanout(control_bpos, (target_bpos,))

    def fanout(self, control_bpos: int, target_bposes: Iterable[int]) -> SparseSet:
        mask = 0
        for t in target_bposes:
            mask |= 1 << t
        cbit = 1 << control_bpos
        return SparseSet(
            self.m, frozenset((i ^ mask) if (i & cbit) else i for i in self.indices)
        )

    def oracle_toggle(self, table_words: np.ndarray) -> SparseSet:
        n = self.m - 1
        ybit = 1 << n
        xmask = ybit - 1
        return SparseSet(
            self.m,
            frozenset(
                (i ^ ybit) if bit_at(table_words, i & xmask) else i
                for i in self.indices
            ),
        )

    def tensor(self, other: SparseSet) -> SparseSet:
        mb = other.m
        return SparseSet(
            self.m + mb,
            frozenset((i << mb) | j for i in self.indices for j in other.indices),
        )


class SparseMap:
    """GF(p) coefficients as {index: nonzero value}."""

    __slots__ = ("m", "p", "coeffs")

    def __init__(self, m: int, p: int, coeffs: dict[int, int]):
        self.m = m
        self.p = p
        self.coeffs = coeffs

    @classmethod
    def zero(cls, m: int, p: int) -> SparseMap:
        return cls(m, p, {})

    @classmethod
    def from_items(cls, m: int, p: int, items: Iterable[tuple[int, int]]) -> SparseMap:
        acc: dict[int, int] = {}
        for i, v in items:
            w = (acc.get(i, 0) + v) % p
            if w:
                acc[i] = w
            else:
                acc.pop(i, None)
        return cls(m, p, acc)

    def coeff(self, i: int) -> int:
        return self.coeffs.get(i, 0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def nnz(self) -> int:
        return len(self.coeffs)

    def support(self) -> list[int]:
        return sorted(self.coeffs)

    def items(self) -> Iterator[tuple[int, int]]:
        return ((i, self.coeffs[i]) for i in sorted(self.coeffs))

    def add(self, other: SparseMap) -> SparseMap:
        acc = dict(self.coeffs)
        for i, v in other.coeffs.items():
            w = (acc.get(i, 0) + v) % self.p
            if w:
                acc[i] = w
            else:
                acc.pop(i, None)
        return SparseMap(self.m, self.p, acc)

    def equal(self, other: SparseMap) -> bool:
        return self.m == other.m and self.coeffs == other.coeffs

    def apply_gate2(self, bpos: int, a: int, b: int, c: int, d: int) -> SparseMap:
        stride = 1 << bpos
        acc: dict[int, int] = {}

        def put(i: int, v: int) -> None:
            w = (acc.get(i, 0) + v) % self.p
            if w:
                acc[i] = w
            else:
                acc.pop(i, None)

        for i, v in self.coeffs.items():
            if i & stride:
                if b:
                    put(i ^ stride, b * v)
                if d:
                    put(i, d * v)
            else:
                if a:
                    put(i, a * v)
                if c:
                    put(i | stride, c * v)
        return SparseMap(self.m, self.p, acc)

    def cnot(self, control_bpos: int, target_bpos: int) -> SparseMap:
        return self.fanout(control_bpos, (target_bpos,))

    def fanout(self, control_bpos: int, target_bposes: Iterable[int]) -> SparseMap:
        mask = 0
        for t in target_bposes:
            mask |= 1 << t
        cbit = 1 << control_bpos
        return SparseMap(
            self.m,
            self.p,
            {((i ^ mask) if (i & cbit) else i): v for i, v in self.coeffs.items()},
        )

    def tensor(self, other: SparseMap) -> SparseMap:
        mb = other.m
        acc = {
            (i << mb) | j: (v * w) % self.p
            for i, v in self.coeffs.items()
            for j, w in other.coeffs.items()
        }
        return SparseMap(self.m + mb, self.p, acc)


BACKEND_NAMES = ("dense", "sparse")


def backend_class(backend: str, p: int):
    if backend == "dense":
        return DenseBits if p == 2 else DenseArray
    if backend == "sparse":
        return SparseSet if p == 2 else SparseMap
    raise ValueError(f"unknown backend {backend!r}; expected one of {BACKEND_NAMES}")


def backend_name(data) -> str:
    return "dense" if isinstance(data, (DenseBits, DenseArray)) else "sparse"

"""Prime-field scalars: exact GF(p) arithmetic with no cross-field coercion."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .errors import MixedFieldError


def _is_prime(p: int) -> bool:
    # Trial division; moduli here are tiny.
    if p < 2:
        return False
    if p in (2, 3):
        return True
    if p % 2 == 0:
        return False
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class FieldSpec:
    """The finite field GF(p) for a prime modulus p."""

    p: int

    def __post_init__(self):
        if not isinstance(self.p, int) or not _is_prime(self.p):
            raise ValueError(f"modulus must be prime, got {self.p!r}")

    def scalar(self, value: int) -> Scalar:
        """The element of this field congruent to `value`."""
        return Scalar(value % self.p, self)

    @property
    def zero(self) -> Scalar:
        return Scalar(0, self)

    @property
    def one(self) -> Scalar:
        return Scalar(1, self)

    def elements(self) -> Iterator[Scalar]:
        """All p elements, in residue order."""
        return (Scalar(v, self) for v in range(self.p))

    def __repr__(self) -> str:
        return f"GF({self.p})"


@dataclass(frozen=True)
class Scalar:
    """An element of GF(p).

    Arithmetic wraps modulo p.  Operands must come from the same field;
    there is no implicit coercion, not even from plain ints.
    """

    value: int
    field: FieldSpec

    def __post_init__(self):
        if not isinstance(self.value, int) or not 0 <= self.value < self.field.p:
            raise ValueError(
                f"value {self.value!r} not a residue modulo {self.field.p}"
            )

    def _check_field(self, other: Scalar) -> None:
        if self.field != other.field:
            raise MixedFieldError(
                f"cannot combine {self.field!r} and {other.field!r} scalars"
            )

    def __add__(self, other: Scalar) -> Scalar:
        if not isinstance(other, Scalar):
            return NotImplemented
        self._check_field(other)
        return Scalar((self.value + other.value) % self.field.p, self.field)

    def __sub__(self, other: Scalar) -> Scalar:
        if not isinstance(other, Scalar):
            return NotImplemented
        self._check_field(other)
        return Scalar((self.value - other.value) % self.field.p, self.field)

    def __mul__(self, other: Scalar) -> Scalar:
        if not isinstance(other, Scalar):
            return NotImplemented
        self._check_field(other)
        return Scalar((self.value * other.value) % self.field.p, self.field)

    def __neg__(self) -> Scalar:
        return Scalar((-self.value) % self.field.p, self.field)

    def inverse(self) -> Scalar:
        """Multiplicative inverse; zero has none."""
        if self.value == 0:
            raise ZeroDivisionError("0 has no multiplicative inverse")
        return Scalar(pow(self.value, self.field.p - 2, self.field.p), self.field)

    def __bool__(self) -> bool:
        return self.value != 0

    def __repr__(self) -> str:
        return f"{self.value}@GF({self.field.p})"


GF2 = FieldSpec(2)

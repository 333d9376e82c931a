"""Exact arithmetic over prime fields GF(p) and over the rationals.

Field elements are kept in a canonical form: integers in ``[0, p)`` for a
prime field, ``fractions.Fraction`` (always in lowest terms) for the
rationals.  The rationals are only used to verify representations over the
reals with exact arithmetic; they are never searched over.

The inner product is the standard bilinear form sum(x_i * y_i), with no
conjugation in any field.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterator, Sequence

MAX_PRIME = 251  # one byte per residue


class FieldMismatchError(ValueError):
    """Raised when operands from different fields are combined."""


def is_prime(n: int) -> bool:
    """Deterministic primality check by trial division (small n only)."""
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


class PrimeField:
    """The prime field GF(p), 2 <= p <= 251.  Elements are ints in [0, p)."""

    def __init__(self, p: int):
        if not is_prime(p):
            raise ValueError(f"field order {p} is not prime")
        if p > MAX_PRIME:
            raise ValueError(f"field order {p} exceeds the supported maximum {MAX_PRIME}")
        self.p = p

    # -- raw operations on canonical residues ---------------------------------

    @property
    def size(self) -> int:
        return self.p

    @property
    def zero(self) -> int:
        return 0

    @property
    def one(self) -> int:
        return 1

    def element(self, x: int) -> int:
        return x % self.p

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.p

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self.p

    def mul(self, a: int, b: int) -> int:
        return (a * b) % self.p

    def neg(self, a: int) -> int:
        return (-a) % self.p

    def inv(self, a: int) -> int:
        if a % self.p == 0:
            raise ZeroDivisionError(f"inverse of 0 in GF({self.p})")
        return pow(a, self.p - 2, self.p)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def elements(self) -> Iterator[int]:
        return iter(range(self.p))

    def inner(self, xs: Sequence[int], ys: Sequence[int]) -> int:
        if len(xs) != len(ys):
            raise ValueError(f"inner product length mismatch: {len(xs)} vs {len(ys)}")
        return sum(x * y for x, y in zip(xs, ys)) % self.p

    # -------------------------------------------------------------------------

    @property
    def name(self) -> str:
        return str(self.p)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self) -> int:
        return hash(("GF", self.p))

    def __repr__(self) -> str:
        return f"GF({self.p})"


class RationalField:
    """The field of rationals; elements are ``Fraction`` values."""

    @property
    def size(self) -> None:
        return None  # infinite

    @property
    def zero(self) -> Fraction:
        return Fraction(0)

    @property
    def one(self) -> Fraction:
        return Fraction(1)

    def element(self, x) -> Fraction:
        return Fraction(x)

    def add(self, a, b) -> Fraction:
        return Fraction(a) + Fraction(b)

    def sub(self, a, b) -> Fraction:
        return Fraction(a) - Fraction(b)

    def mul(self, a, b) -> Fraction:
        return Fraction(a) * Fraction(b)

    def neg(self, a) -> Fraction:
        return -Fraction(a)

    def inv(self, a) -> Fraction:
        if Fraction(a) == 0:
            raise ZeroDivisionError("inverse of 0 in Q")
        return 1 / Fraction(a)

    def div(self, a, b) -> Fraction:
        return self.mul(a, self.inv(b))

    def inner(self, xs: Sequence, ys: Sequence) -> Fraction:
        if len(xs) != len(ys):
            raise ValueError(f"inner product length mismatch: {len(xs)} vs {len(ys)}")
        return sum((Fraction(x) * Fraction(y) for x, y in zip(xs, ys)), Fraction(0))

    @property
    def name(self) -> str:
        return "Q"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, RationalField)

    def __hash__(self) -> int:
        return hash("Q")

    def __repr__(self) -> str:
        return "Q"


#: Union alias for annotation purposes.
Field = PrimeField | RationalField

GF2 = PrimeField(2)
GF3 = PrimeField(3)
QQ = RationalField()


def field_from_name(name: str) -> Field:
    """Parse a field tag as it appears on the command line and in JSON: '2', '5', ..., 'Q'."""
    if name.strip().upper() == "Q":
        return QQ
    try:
        p = int(name)
    except ValueError:
        raise ValueError(f"unrecognized field {name!r}; expected a prime or 'Q'") from None
    return PrimeField(p)


class FieldElement:
    """A field element paired with its field; arithmetic checks for mixed fields.

    Thin convenience wrapper; the solvers work on raw canonical values through
    the field objects directly.
    """

    __slots__ = ("field", "value")

    def __init__(self, field: Field, value):
        self.field = field
        self.value = field.element(value)

    def _check(self, other: "FieldElement") -> None:
        if not isinstance(other, FieldElement):
            raise TypeError(f"expected FieldElement, got {type(other).__name__}")
        if other.field != self.field:
            raise FieldMismatchError(f"mixed fields: {self.field} and {other.field}")

    def __add__(self, other: "FieldElement") -> "FieldElement":
        self._check(other)
        return FieldElement(self.field, self.field.add(self.value, other.value))

    def __sub__(self, other: "FieldElement") -> "FieldElement":
        self._check(other)
        return FieldElement(self.field, self.field.sub(self.value, other.value))

    def __mul__(self, other: "FieldElement") -> "FieldElement":
        self._check(other)
        return FieldElement(self.field, self.field.mul(self.value, other.value))

    def __neg__(self) -> "FieldElement":
        return FieldElement(self.field, self.field.neg(self.value))

    def inverse(self) -> "FieldElement":
        return FieldElement(self.field, self.field.inv(self.value))

    def __truediv__(self, other: "FieldElement") -> "FieldElement":
        self._check(other)
        return FieldElement(self.field, self.field.div(self.value, other.value))

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, FieldElement)
            and other.field == self.field
            and other.value == self.value
        )

    def __hash__(self) -> int:
        return hash((self.field, self.value))

    def __repr__(self) -> str:
        return f"{self.field.name}:{self.value}"


def inner_product(xs: Sequence[FieldElement], ys: Sequence[FieldElement]) -> FieldElement:
    """Standard inner product of two vectors of wrapped field elements."""
    if len(xs) != len(ys):
        raise ValueError(f"inner product length mismatch: {len(xs)} vs {len(ys)}")
    if not xs:
        raise ValueError("inner product of empty vectors has no field")
    field = xs[0].field
    for e in list(xs) + list(ys):
        if e.field != field:
            raise FieldMismatchError(f"mixed fields: {field} and {e.field}")
    return FieldElement(field, field.inner([e.value for e in xs], [e.value for e in ys]))

"""Exact scalar arithmetic: rational numbers or a prime field.

Rational coefficients are plain ``fractions.Fraction`` values.  Prime-field
coefficients are ``ModP`` values that carry their modulus, so polynomial
code never needs to know which field it is working over.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import FieldError


@dataclass(frozen=True)
class ModP:
    """Residue modulo a prime p."""

    value: int
    p: int

    def _other(self, other) -> "ModP | None":
        if isinstance(other, ModP):
            if other.p != self.p:
                raise FieldError(f"mixed moduli {self.p} and {other.p}")
            return other
        if isinstance(other, int):
            return ModP(other % self.p, self.p)
        return None

    def __add__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return ModP((self.value + o.value) % self.p, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return ModP((self.value - o.value) % self.p, self.p)

    def __rsub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return ModP((self.value * o.value) % self.p, self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return ModP(-self.value % self.p, self.p)

    def __truediv__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        if o.value == 0:
            raise ZeroDivisionError("division by zero residue")
        return self * ModP(pow(o.value, -1, self.p), self.p)

    def __rtruediv__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return o / self

    def __bool__(self) -> bool:
        return self.value != 0

    def __str__(self) -> str:
        return str(self.value)


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class Rationals:
    """The field of rational numbers."""

    @property
    def name(self) -> str:
        return "Q"

    @property
    def zero(self) -> Fraction:
        return Fraction(0)

    @property
    def one(self) -> Fraction:
        return Fraction(1)

    def of(self, numerator: int, denominator: int = 1) -> Fraction:
        return Fraction(numerator, denominator)


@dataclass(frozen=True)
class PrimeField:
    """The prime field with p elements."""

    p: int

    def __post_init__(self):
        if not _is_prime(self.p):
            raise FieldError(f"{self.p} is not prime")

    @property
    def name(self) -> str:
        return f"Fp {self.p}"

    @property
    def zero(self) -> ModP:
        return ModP(0, self.p)

    @property
    def one(self) -> ModP:
        return ModP(1, self.p)

    def of(self, numerator: int, denominator: int = 1) -> ModP:
        if denominator % self.p == 0:
            raise ZeroDivisionError("denominator vanishes in the prime field")
        return ModP(numerator % self.p, self.p) / ModP(denominator % self.p, self.p)


Field = Rationals | PrimeField


def field_from_name(text: str) -> Field:
    """Parse a field descriptor such as ``Q``, ``q``, ``Fp 5`` or ``fp:5``."""
    t = text.strip()
    low = t.lower()
    if low == "q":
        return Rationals()
    for sep in (":", " "):
        if low.startswith("fp" + sep):
            body = t[3:].strip()
            if not body.isdigit():
                raise FieldError(f"bad prime in field descriptor {text!r}")
            return PrimeField(int(body))
    raise FieldError(f"unknown field descriptor {text!r} (expected Q or Fp <prime>)")

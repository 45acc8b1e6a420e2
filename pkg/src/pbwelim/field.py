"""Coefficient fields: exact rationals and prime fields.

Rationals are plain :class:`fractions.Fraction` values. Prime-field
elements are :class:`ModP` instances; the two never mix.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .errors import InputError


class ModP:
    """Element of GF(p), stored as its residue in ``[0, p)``."""

    __slots__ = ("v", "p")

    def __init__(self, v: int, p: int):
        self.v = v % p
        self.p = p

    def _coerce(self, other):
        if isinstance(other, ModP):
            if other.p != self.p:
                raise TypeError(f"cannot mix GF({self.p}) and GF({other.p}) elements")
            return other.v
        if isinstance(other, int):
            return other % self.p
        if isinstance(other, Fraction):
            raise TypeError("cannot mix rational and prime-field scalars")
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return ModP(self.v + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return ModP(self.v - o, self.p)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return ModP(o - self.v, self.p)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return ModP(self.v * o, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o == 0:
            raise ZeroDivisionError(f"division by zero in GF({self.p})")
        return ModP(self.v * pow(o, -1, self.p), self.p)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.v == 0:
            raise ZeroDivisionError(f"division by zero in GF({self.p})")
        return ModP(o * pow(self.v, -1, self.p), self.p)

    def __neg__(self):
        return ModP(-self.v, self.p)

    def __pos__(self):
        return self

    def __bool__(self):
        return self.v != 0

    def __eq__(self, other):
        if isinstance(other, ModP):
            return self.p == other.p and self.v == other.v
        if isinstance(other, int):
            return self.v == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.v, self.p))

    def __repr__(self):
        return f"ModP({self.v}, {self.p})"

    def __str__(self):
        return str(self.v)


class Field:
    """Field descriptor; calling it converts ints and Fractions to elements."""

    name = "?"

    def __call__(self, value):
        raise NotImplementedError

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    def __repr__(self):
        return self.name


class RationalField(Field):
    name = "QQ"

    def __call__(self, value):
        if isinstance(value, ModP):
            raise TypeError("cannot convert a prime-field element to a rational")
        if isinstance(value, float):
            raise TypeError("floating point coefficients are not allowed")
        return Fraction(value)

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")


class PrimeField(Field):
    def __init__(self, p: int):
        self.p = p
        self.name = f"GF({p})"

    def __call__(self, value):
        p = self.p
        if isinstance(value, ModP):
            if value.p != p:
                raise TypeError(f"cannot convert GF({value.p}) element to GF({p})")
            return value
        if isinstance(value, bool) or isinstance(value, float):
            raise TypeError(f"cannot convert {type(value).__name__} to {self.name}")
        if isinstance(value, int):
            return ModP(value, p)
        q = Fraction(value)
        if q.denominator % p == 0:
            raise ZeroDivisionError(f"denominator of {q} vanishes in {self.name}")
        return ModP(q.numerator * pow(q.denominator, -1, p), p)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))


QQ = RationalField()


@lru_cache(maxsize=None)
def GF(p: int) -> PrimeField:
    """Return the prime field of order ``p``; ``p`` must be prime."""
    from sympy import isprime

    if not isinstance(p, int) or p < 2 or not isprime(p):
        raise InputError(f"GF modulus must be prime, got {p}")
    return PrimeField(p)


def format_scalar(c) -> str:
    if isinstance(c, Fraction) and c.denominator == 1:
        return str(c.numerator)
    return str(c)

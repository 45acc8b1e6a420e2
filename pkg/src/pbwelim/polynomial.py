"""PBW monomials and sparse polynomials.

A monomial is a tuple of ``n`` nonnegative exponents ``(a1, ..., an)``
standing for the ordered product ``a_1^a1 ... a_n^an``. A polynomial is a
finite map monomial -> nonzero field scalar. Products of polynomials need
an algebra (see :mod:`pbwelim.algebra`); this module only does the linear
structure.
"""
from __future__ import annotations

import os
from fractions import Fraction
from typing import Iterable, Mapping

from .errors import InputError, NoLeadingTermError

Monomial = tuple

# machine-word exponents; overflow is an error, not wraparound
MAX_EXPONENT = 2**63 - 1

DEBUG = os.environ.get("PBWELIM_DEBUG", "") not in ("", "0")


def unit(n: int) -> Monomial:
    return (0,) * n


def generator(n: int, i: int) -> Monomial:
    e = [0] * n
    e[i] = 1
    return tuple(e)


def mono_add(a: Monomial, b: Monomial) -> Monomial:
    if len(a) != len(b):
        raise InputError(f"monomial length mismatch: {len(a)} vs {len(b)}")
    s = tuple(x + y for x, y in zip(a, b))
    if max(s, default=0) > MAX_EXPONENT:
        raise OverflowError(f"exponent overflow in {a} + {b}")
    return s


def mono_sub(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x - y for x, y in zip(a, b))


def divides(a: Monomial, b: Monomial) -> bool:
    """True if ``a`` is componentwise <= ``b``."""
    return all(x <= y for x, y in zip(a, b))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def weighted_degree(m: Monomial, weights) -> int:
    return sum(w * e for w, e in zip(weights, m))


def support(m: Monomial) -> frozenset:
    return frozenset(i for i, e in enumerate(m) if e)


def add_scaled(acc: dict, terms: Mapping, c) -> dict:
    """In place ``acc += c * terms``; drops cancelled entries."""
    for m, v in terms.items():
        s = acc.get(m)
        if s is None:
            acc[m] = c * v
        else:
            s = s + c * v
            if s:
                acc[m] = s
            else:
                del acc[m]
    return acc


class Polynomial:
    """Immutable sparse polynomial in PBW coordinates."""

    __slots__ = ("_terms", "n")

    def __init__(self, terms: Mapping | None = None, n: int | None = None):
        terms = {} if terms is None else terms
        if n is None:
            if not terms:
                raise InputError("zero polynomial needs an explicit generator count")
            n = len(next(iter(terms)))
        clean = {}
        for m, c in terms.items():
            if len(m) != n:
                raise InputError(f"monomial {m} has length {len(m)}, expected {n}")
            if c:
                # bare ints are read as rationals so 1/c stays exact
                clean[tuple(m)] = Fraction(c) if type(c) is int else c
        self._terms = clean
        self.n = n

    @classmethod
    def _wrap(cls, terms: dict, n: int) -> "Polynomial":
        # trusted constructor: terms already canonical and owned by the result
        if DEBUG:
            assert all(terms.values()), "zero coefficient stored"
            assert all(len(m) == n for m in terms)
        p = object.__new__(cls)
        p._terms = terms
        p.n = n
        return p

    @classmethod
    def zero(cls, n: int) -> "Polynomial":
        return cls._wrap({}, n)

    @classmethod
    def constant(cls, c, n: int) -> "Polynomial":
        return cls._wrap({unit(n): c} if c else {}, n)

    @classmethod
    def monomial(cls, m: Monomial, c) -> "Polynomial":
        return cls._wrap({tuple(m): c} if c else {}, len(m))

    @property
    def terms(self) -> Mapping:
        return self._terms

    def items(self):
        return self._terms.items()

    def monomials(self):
        return self._terms.keys()

    def coefficient(self, m: Monomial):
        return self._terms.get(tuple(m), 0)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def __iter__(self):
        return iter(self._terms)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.n == other.n and self._terms == other._terms
        if other == 0:
            return not self._terms
        return NotImplemented

    def __hash__(self):
        return hash((self.n, frozenset(self._terms.items())))

    def _check(self, other: "Polynomial"):
        if other.n != self.n:
            raise InputError(f"generator count mismatch: {self.n} vs {other.n}")

    def __add__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._check(other)
        return Polynomial._wrap(add_scaled(dict(self._terms), other._terms, 1), self.n)

    def __sub__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._check(other)
        return Polynomial._wrap(add_scaled(dict(self._terms), other._terms, -1), self.n)

    def __neg__(self):
        return Polynomial._wrap({m: -c for m, c in self._terms.items()}, self.n)

    def __mul__(self, c):
        if isinstance(c, Polynomial):
            raise TypeError("polynomial products depend on the algebra; use algebra.multiply")
        if not c:
            return Polynomial.zero(self.n)
        return Polynomial._wrap({m: v * c for m, v in self._terms.items()}, self.n)

    __rmul__ = __mul__

    def scale(self, c) -> "Polynomial":
        return self * c

    def support(self) -> frozenset:
        s = set()
        for m in self._terms:
            s.update(i for i, e in enumerate(m) if e)
        return frozenset(s)

    def supported_in(self, keep: Iterable[int]) -> bool:
        keep = set(keep)
        return self.support() <= keep

    def total_degree(self, weights=None) -> int:
        if not self._terms:
            return -1
        if weights is None:
            return max(sum(m) for m in self._terms)
        return max(weighted_degree(m, weights) for m in self._terms)

    # ordering-dependent views

    def leading_monomial(self, order) -> Monomial:
        if not self._terms:
            raise NoLeadingTermError("the zero polynomial has no leading term")
        return max(self._terms, key=order.key)

    def leading_coefficient(self, order):
        return self._terms[self.leading_monomial(order)]

    def leading_term(self, order):
        m = self.leading_monomial(order)
        return m, self._terms[m]

    def monic(self, order) -> "Polynomial":
        return self * (1 / self.leading_coefficient(order)) if self._terms else self

    def sorted_terms(self, order, descending: bool = True):
        return sorted(self._terms.items(), key=lambda mc: order.key(mc[0]), reverse=descending)

    def __repr__(self):
        inner = ", ".join(f"{m}: {c}" for m, c in sorted(self._terms.items()))
        return f"Polynomial({{{inner}}}, n={self.n})"


def leading_monomial(order, p: Polynomial) -> Monomial:
    return p.leading_monomial(order)


def leading_coefficient(order, p: Polynomial):
    return p.leading_coefficient(order)

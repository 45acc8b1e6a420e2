"""Admissible monomial orders given by integer weight matrices.

Monomials are compared row by row on the dot products of each row with the
exponent vector; the first strict difference decides. Every named order
(lex, weighted graded lex, block elimination) is a constructor producing
rows, so there is a single comparison kernel.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .errors import InputError
from .linalg import rank


class MatrixOrder:
    __slots__ = ("rows", "n", "label", "_keys")

    def __init__(self, rows: Iterable[Sequence[int]], label: str | None = None):
        rows = [tuple(int(x) for x in r) for r in rows]
        if not rows:
            raise InputError("matrix order needs at least one row")
        n = len(rows[0])
        if n == 0 or any(len(r) != n for r in rows):
            raise InputError("matrix order rows must share a positive length")
        rows = [r for r in rows if any(r)]
        for i in range(n):
            first = next((r[i] for r in rows if r[i] != 0), 0)
            if first <= 0:
                raise InputError(
                    f"inadmissible order: first nonzero entry in column {i + 1} must be positive"
                )
        vecs = [{j: Fraction(x) for j, x in enumerate(r) if x} for r in rows]
        if rank(vecs) < n:
            raise InputError(f"matrix order is rank deficient (rank < {n})")
        self.rows = tuple(rows)
        self.n = n
        self.label = label
        self._keys: dict = {}

    def key(self, m) -> tuple:
        k = self._keys.get(m)
        if k is None:
            k = tuple(sum(a * b for a, b in zip(r, m)) for r in self.rows)
            self._keys[m] = k
        return k

    def compare(self, u, v) -> int:
        """Return -1, 0 or 1 as ``u`` is less than, equal to or greater than ``v``."""
        if len(u) != self.n or len(v) != self.n:
            raise InputError(f"dimension mismatch: order on {self.n} generators, "
                             f"monomials of length {len(u)} and {len(v)}")
        ku, kv = self.key(tuple(u)), self.key(tuple(v))
        return (ku > kv) - (ku < kv)

    def less(self, u, v) -> bool:
        return self.key(u) < self.key(v)

    def max(self, monomials):
        return max(monomials, key=self.key)

    @property
    def first_row(self) -> tuple:
        return self.rows[0]

    def is_degree_compatible(self, weights) -> bool:
        return self.rows[0] == tuple(weights)

    def __eq__(self, other):
        return isinstance(other, MatrixOrder) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"MatrixOrder({self.label or list(map(list, self.rows))})"

    def matrix_spec(self) -> str:
        return "matrix:" + ";".join(",".join(map(str, r)) for r in self.rows)


def _check_perm(perm, n):
    perm = tuple(perm)
    if sorted(perm) != list(range(n)):
        raise InputError(f"{perm} is not a permutation of generator positions 0..{n - 1}")
    return perm


def _check_weights(weights):
    weights = tuple(int(w) for w in weights)
    if any(w < 1 for w in weights):
        raise InputError(f"weights must be positive integers, got {weights}")
    return weights


def _unit_row(n, i):
    r = [0] * n
    r[i] = 1
    return r


def lex(n: int, perm: Sequence[int] | None = None) -> MatrixOrder:
    """Pure lex; ``perm`` lists generator positions from most to least significant."""
    perm = _check_perm(range(n) if perm is None else perm, n)
    return MatrixOrder([_unit_row(n, i) for i in perm], label="lex")


def graded(weights: Sequence[int], tie: Sequence[int] | None = None) -> MatrixOrder:
    """Weighted degree first, ties broken lexicographically.

    The default tie-break makes the highest-index generator most significant,
    i.e. ``X_1 < X_2 < ... < X_n`` among generators of equal weight.
    """
    weights = _check_weights(weights)
    n = len(weights)
    tie = _check_perm(range(n - 1, -1, -1) if tie is None else tie, n)
    return MatrixOrder([list(weights)] + [_unit_row(n, i) for i in tie],
                       label="grlex" if set(weights) == {1} else "wgrlex")


def elimination(n: int, keep: Iterable[int], weights: Sequence[int] | None = None) -> MatrixOrder:
    """Two-block order: anything touching a generator outside ``keep`` is larger
    than everything supported inside ``keep``."""
    keep = sorted(set(keep))
    if any(not 0 <= i < n for i in keep):
        raise InputError(f"keep-set {keep} out of range for {n} generators")
    weights = _check_weights([1] * n if weights is None else weights)
    if len(weights) != n:
        raise InputError("weights length does not match generator count")
    out = [i for i in range(n) if i not in keep]
    rows = []
    for block in (out, keep):
        if not block:
            continue
        rows.append([weights[i] if i in block else 0 for i in range(n)])
        rows.extend(_unit_row(n, i) for i in sorted(block, reverse=True))
    return MatrixOrder(rows, label="elim")


def make_order(kind: str, n: int, *, perm=None, weights=None, tie=None, keep=None, rows=None):
    if kind == "lex":
        return lex(n, perm)
    if kind == "graded":
        return graded([1] * n if weights is None else weights, tie)
    if kind == "elimination":
        return elimination(n, keep if keep is not None else range(n), weights)
    if kind == "matrix":
        order = MatrixOrder(rows)
        if order.n != n:
            raise InputError(f"matrix order has {order.n} columns, expected {n}")
        return order
    raise InputError(f"unknown order kind {kind!r}")


def satisfies_elimination(order: MatrixOrder, keep: Iterable[int], bound: int = 6) -> bool:
    """Brute-force check: kept-support monomials below all others, degrees <= bound."""
    from itertools import product

    keep = set(keep)
    n = order.n
    inside, outside = [], []
    for e in product(range(bound + 1), repeat=n):
        if sum(e) > bound:
            continue
        (inside if all(e[i] == 0 for i in range(n) if i not in keep) else outside).append(e)
    if not inside or not outside:
        return True
    top_in = max(inside, key=order.key)
    bottom_out = min(outside, key=order.key)
    return order.key(top_in) < order.key(bottom_out)

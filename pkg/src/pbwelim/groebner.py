"""Left Groebner bases in solvable polynomial algebras.

Left division: ``g`` reduces ``f`` when LM(g) divides LM(f) componentwise,
by subtracting a scalar multiple of ``a^delta * g`` with
``delta = LM(f) - LM(g)``. In a solvable algebra ``a^delta * g`` has leading
monomial ``delta + LM(g)`` with a nonzero (not necessarily unit) leading
coefficient, which the reduction divides by.
"""
from __future__ import annotations

import dataclasses
import heapq
import itertools
import logging
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Mapping, Sequence

from .algebra import (AlgebraPresentation, NotSolvableError, ValidatedAlgebra, default_graded_order,
                      graded_orders, solvable_check)
from .errors import InputError, ResourceCapError
from .field import RationalField
from .order import MatrixOrder
from .polynomial import DEBUG, Polynomial, add_scaled, divides, mono_lcm, mono_sub

log = logging.getLogger(__name__)

DEFAULT_MAX_DEGREE = 40
DEFAULT_MAX_BASIS = 5000
# effort budgets per tie-break when the caller lets graded_groebner pick the order
GRADED_WORK_BUDGETS = (3 * 10**6, 3 * 10**7, 3 * 10**8)
GRADED_RETRY_ORDERS = 6


@dataclass(frozen=True)
class Caps:
    max_degree: int = DEFAULT_MAX_DEGREE
    max_basis: int = DEFAULT_MAX_BASIS
    # reduction effort, in term-times-coefficient-bit units; None means unbounded
    max_work: int | None = None


class LeftIdeal:
    """Left ideal generated by nonzero polynomials of an algebra."""

    def __init__(self, algebra: AlgebraPresentation, generators: Iterable[Polynomial],
                 name: str | None = None):
        gens = [g for g in generators]
        if not gens or any(not g for g in gens):
            raise InputError("a left ideal needs a nonempty list of nonzero generators")
        if any(g.n != algebra.n for g in gens):
            raise InputError("generator does not live in the algebra's coordinates")
        F = algebra.field
        gens = [Polynomial({m: F(c) for m, c in g.items()}, g.n) for g in gens]
        self.algebra = algebra
        self.generators = tuple(gens)
        self.name = name
        self._gb: dict = {}

    def __repr__(self):
        return f"LeftIdeal({self.name or '?'}, {len(self.generators)} generators)"

    def default_order(self) -> MatrixOrder:
        order = default_graded_order(self.algebra)
        if order is None:
            raise NotSolvableError("no degree-compatible order makes the algebra solvable")
        return order

    def groebner(self, order: MatrixOrder | None = None, caps: Caps | None = None) -> "GroebnerBasis":
        order = order or self.default_order()
        caps = caps or Caps()
        # the coefficient cap only limits effort; a finished basis serves any cap
        key = (order.rows, caps.max_degree, caps.max_basis)
        gb = self._gb.get(key)
        if gb is None:
            gb = buchberger(self, order, caps)
            self._gb[key] = gb
        return gb


class GroebnerBasis:
    """Reduced monic left Groebner basis, sorted by ascending leading monomial."""

    def __init__(self, algebra: ValidatedAlgebra, order: MatrixOrder,
                 elements: Sequence[Polynomial], reduced: bool = True):
        self.algebra = algebra
        self.order = order
        self.elements = tuple(sorted(elements, key=lambda g: order.key(g.leading_monomial(order))))
        self.reduced = reduced

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def __getitem__(self, i):
        return self.elements[i]

    def __eq__(self, other):
        return (isinstance(other, GroebnerBasis) and self.order == other.order
                and self.elements == other.elements)

    def __hash__(self):
        return hash(self.elements)

    @property
    def leading_monomials(self) -> list:
        return [g.leading_monomial(self.order) for g in self.elements]

    def is_unit(self) -> bool:
        return len(self.elements) == 1 and not any(self.leading_monomials[0])

    def reduce(self, f: Polynomial) -> Polynomial:
        return left_normal_form(self.algebra, f, self.elements, self.order)[0]

    def contains(self, f: Polynomial) -> bool:
        return not self.reduce(f)


def _prepared(G, order):
    out = []
    for g in G:
        lm = g.leading_monomial(order)
        out.append((lm, g.terms))
    return out


def _normal_form(rw, key, f_terms: dict, prepared, full: bool = True):
    """Core reduction loop on raw dicts; returns (remainder, steps)."""
    p = dict(f_terms)
    r: dict = {}
    steps = 0
    while p:
        m = max(p, key=key)
        c = p[m]
        for lm, gt in prepared:
            if divides(lm, m):
                delta = mono_sub(m, lm)
                prod: dict = {}
                for b, cb in gt.items():
                    add_scaled(prod, rw.mono_mul(delta, b), cb)
                if DEBUG:
                    assert max(prod, key=key) == m, "cofactor product overshoots the current LM"
                add_scaled(p, prod, -c / prod[m])
                steps += 1
                break
        else:
            if not full:
                r.update(p)
                break
            r[m] = c
            del p[m]
    return r, steps


def left_normal_form(alg: ValidatedAlgebra, f: Polynomial, G: Sequence[Polynomial],
                     order: MatrixOrder | None = None):
    """Fully reduce ``f`` by left division; returns ``(remainder, steps)``."""
    order = order or alg.order
    if not f or not G:
        return f, 0
    rw = alg.presentation.rewriter
    with rw.session(None):
        r, steps = _normal_form(rw, order.key, f.terms, _prepared(G, order))
    return Polynomial._wrap(r, f.n), steps


def left_s_polynomial(alg: ValidatedAlgebra, g1: Polynomial, g2: Polynomial,
                      order: MatrixOrder | None = None) -> Polynomial:
    order = order or alg.order
    if not g1 or not g2:
        raise InputError("S-polynomial of a zero polynomial")
    lm1, lm2 = g1.leading_monomial(order), g2.leading_monomial(order)
    gamma = mono_lcm(lm1, lm2)
    p1 = alg.mono_times(mono_sub(gamma, lm1), g1)
    p2 = alg.mono_times(mono_sub(gamma, lm2), g2)
    c1, c2 = p1.coefficient(gamma), p2.coefficient(gamma)
    return p1 * c2 - p2 * c1


def _commuting_supports(pres: AlgebraPresentation, s1: frozenset, s2: frozenset) -> bool:
    one = pres.field.one
    for i in s1:
        for j in s2:
            if i == j:
                continue
            hi, lo = max(i, j), min(i, j)
            rhs = pres.rhs[(hi, lo)]
            if len(rhs) != 1:
                return False
            (m, c), = rhs.items()
            if c != one or m[hi] != 1 or m[lo] != 1 or sum(m) != 2:
                return False
    return True


def _skip_pair(pres, lm1, lm2, g1: Polynomial, g2: Polynomial) -> bool:
    # product criterion; sound only when g1 and g2 commute in the algebra
    if any(a and b for a, b in zip(lm1, lm2)):
        return False
    return _commuting_supports(pres, g1.support(), g2.support())


class _Coeffs:
    """Coefficient arithmetic for the completion loop.

    Over QQ polynomials are kept as primitive integer vectors and reduction is
    fraction-free (``p <- a*p - b*prod``, then content removal), which avoids
    a gcd on every rational operation. Other fields divide directly.
    """

    def __init__(self, field, rw, max_work: int | None = None):
        self.integral = isinstance(field, RationalField)
        self.field = field
        self.rw = rw
        self._cache: dict = {}
        self.work = 0
        self.max_work = max_work

    def charge(self, terms: int, c):
        self.work += terms * (abs(c).bit_length() if self.integral else 1)
        if self.max_work is not None and self.work > self.max_work:
            raise ResourceCapError("max-work", self.max_work)

    def load(self, terms: Mapping) -> dict:
        if not self.integral:
            return dict(terms)
        den = 1
        for c in terms.values():
            den = den * c.denominator // gcd(den, c.denominator)
        return _primitive({m: int(c * den) for m, c in terms.items()})

    def unload(self, terms: dict) -> dict:
        if not self.integral:
            return terms
        return {m: Fraction(c) for m, c in terms.items()}

    def mono_mul(self, a, b):
        if not self.integral:
            return 1, self.rw.mono_mul(a, b)
        key = (a, b)
        hit = self._cache.get(key)
        if hit is None:
            raw = self.rw.mono_mul(a, b)
            den = 1
            for c in raw.values():
                den = den * c.denominator // gcd(den, c.denominator)
            hit = (den, {m: int(c * den) for m, c in raw.items()})
            self._cache[key] = hit
        return hit

    def times(self, delta, gt: dict) -> dict:
        """``a^delta * g`` (up to a nonzero scalar when integral)."""
        prod: dict = {}
        if not self.integral:
            for b, cb in gt.items():
                add_scaled(prod, self.rw.mono_mul(delta, b), cb)
            return prod
        parts = [(cb, self.mono_mul(delta, b)) for b, cb in gt.items()]
        den = 1
        for _, (d, _t) in parts:
            den = den * d // gcd(den, d)
        for cb, (d, t) in parts:
            add_scaled(prod, t, cb * (den // d))
        return prod


def _primitive(terms: dict) -> dict:
    g = gcd(*terms.values())
    if g > 1:
        return {m: c // g for m, c in terms.items()}
    return terms


def _reduce_terms(ops: _Coeffs, key, f_terms: dict, prepared, full: bool = True) -> dict:
    """Left normal form of ``f`` (up to a nonzero scalar over QQ)."""
    p = dict(f_terms)
    r: dict = {}
    integral = ops.integral
    while p:
        m = max(p, key=key)
        c = p[m]
        for lm, gt in prepared:
            if divides(lm, m):
                prod = ops.times(mono_sub(m, lm), gt)
                if DEBUG:
                    assert max(prod, key=key) == m, "cofactor product overshoots the current LM"
                lead = prod[m]
                ops.charge(len(prod) + len(p), c)
                if integral:
                    g = gcd(c, lead)
                    a, b = lead // g, c // g
                    if a < 0:
                        a, b = -a, -b
                    if a != 1:
                        for t in p:
                            p[t] *= a
                        for t in r:
                            r[t] *= a
                    add_scaled(p, prod, -b)
                    if a != 1 and (p or r):
                        g = gcd(*p.values(), *r.values())
                        if g > 1:
                            for t in p:
                                p[t] //= g
                            for t in r:
                                r[t] //= g
                else:
                    add_scaled(p, prod, -c / lead)
                break
        else:
            if not full:
                r.update(p)
                break
            r[m] = c
            del p[m]
    if integral and r:
        r = _primitive(r)
    return r


def _s_terms(ops: _Coeffs, lm1, g1: dict, lm2, g2: dict) -> dict:
    gamma = mono_lcm(lm1, lm2)
    p1 = ops.times(mono_sub(gamma, lm1), g1)
    p2 = ops.times(mono_sub(gamma, lm2), g2)
    c1, c2 = p1[gamma], p2[gamma]
    if ops.integral:
        g = gcd(c1, c2)
        c1, c2 = c1 // g, c2 // g
    out = {m: c * c2 for m, c in p1.items()}
    add_scaled(out, p2, -c1)
    return out


def buchberger(ideal: LeftIdeal, order: MatrixOrder, caps: Caps | None = None) -> GroebnerBasis:
    """Reduced monic left Groebner basis of ``ideal`` under ``order``.

    Pairs are processed smallest lcm first (ties in creation order); the only
    pair ever skipped is a coprime one whose supports commute exactly.
    """
    caps = caps or Caps()
    alg = ideal.algebra.validated(order)
    pres = ideal.algebra
    rw = pres.rewriter
    key = order.key
    n = pres.n
    ops = _Coeffs(pres.field, rw, caps.max_work)
    basis: list = []  # (lm, terms)
    live: list = []  # indices whose lm is not divisible by a later element's lm
    heap: list = []
    counter = itertools.count()
    unit = None

    def add(t: dict):
        nonlocal unit
        lm = max(t, key=key)
        if sum(lm) > caps.max_degree:
            raise ResourceCapError("max-degree", caps.max_degree)
        if len(basis) >= caps.max_basis:
            raise ResourceCapError("max-basis", caps.max_basis)
        k = len(basis)
        basis.append((lm, t))
        if not any(lm):
            unit = k
            return
        for i in list(live):
            heapq.heappush(heap, (key(mono_lcm(basis[i][0], lm)), next(counter), i, k))
        live[:] = [i for i in live if not divides(lm, basis[i][0])]
        live.append(k)

    def reducers():
        # prefer short reducers with small coefficients: it slows coefficient growth
        return sorted((basis[i] for i in live), key=_weight)

    with rw.session(None):
        for g in ideal.generators:
            t = _reduce_terms(ops, key, ops.load(g.terms), reducers(), full=False) if basis else ops.load(g.terms)
            if t:
                add(t)
            if unit is not None:
                break
        while heap and unit is None:
            _, _, i, j = heapq.heappop(heap)
            (lmi, gi), (lmj, gj) = basis[i], basis[j]
            if _skip_pair(pres, lmi, lmj, Polynomial._wrap(gi, n), Polynomial._wrap(gj, n)):
                continue
            s = _s_terms(ops, lmi, gi, lmj, gj)
            if not s:
                continue
            t = _reduce_terms(ops, key, s, reducers(), full=False)
            if t:
                add(t)
        if unit is not None:
            elements = [Polynomial.constant(pres.field.one, n)]
        else:
            elements = _interreduce(ops, key, [basis[i] for i in live], n, order)
    log.debug("buchberger: %d elements from %d candidates, work %d", len(elements), len(basis), ops.work)
    return GroebnerBasis(alg, order, elements, reduced=True)


def _weight(item):
    terms = item[1]
    return len(terms) * max(_size(c) for c in terms.values())


def _size(c):
    if isinstance(c, int):
        return abs(c).bit_length() + 1
    if isinstance(c, Fraction):
        return c.numerator.bit_length() + c.denominator.bit_length()
    return 1


def _interreduce(ops, key, items, n, order) -> list:
    # items form a minimal basis, so each leading term survives reduction by
    # the others and the (rescaled) result only needs making monic
    out = []
    for idx, (lm, t) in enumerate(items):
        others = [it for q, it in enumerate(items) if q != idx]
        r = _reduce_terms(ops, key, t, others)
        lead = r[lm]
        out.append(Polynomial._wrap({m: ops.field(c) / lead for m, c in r.items()}, n))
    return out


def graded_groebner(ideal: LeftIdeal, caps: Caps | None = None, budgets=GRADED_WORK_BUDGETS,
                    max_orders: int = GRADED_RETRY_ORDERS) -> GroebnerBasis:
    """Reduced basis under some degree-compatible order making the algebra solvable.

    Coefficient growth depends strongly on the tie-break. Each work budget in
    turn is tried on up to ``max_orders`` solvable tie-breaks (default first);
    after the last budget the default order runs with the caller's caps.
    """
    pres = ideal.algebra
    caps = caps or Caps()
    orders = [o for o in itertools.islice(graded_orders(pres), 720) if solvable_check(pres, o).passed]
    if not orders:
        raise NotSolvableError("no degree-compatible order makes the algebra solvable")
    orders = orders[:max_orders]
    for budget in budgets:
        if caps.max_work is not None and budget >= caps.max_work:
            break
        for order in orders:
            try:
                return ideal.groebner(order, dataclasses.replace(caps, max_work=budget))
            except ResourceCapError as exc:
                if exc.cap != "max-work":
                    raise
                log.info("graded basis under %s ran over %d work units", order.matrix_spec(),
                         budget)
    return ideal.groebner(orders[0], caps)


def is_member(ideal: LeftIdeal, f: Polynomial, order: MatrixOrder | None = None,
              caps: Caps | None = None) -> bool:
    if not f:
        return True
    return ideal.groebner(order, caps).contains(f)

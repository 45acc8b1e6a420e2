"""Algebras presented by pairwise commutation relations.

A presentation on generators ``a_1 < ... < a_n`` carries, for every pair
``j > i``, a right-hand side ``r_ji`` in PBW coordinates encoding
``a_j a_i = r_ji``. Usually ``r_ji = lam * a_i a_j + tail``, but the
coefficient of ``a_i a_j`` may be zero (binomial skew relations send
``a_j a_i`` to some other ascending pair).

Products are computed by rewriting descending adjacent pairs, memoized per
``(generator, monomial)``. A second, naive word-rewriting engine
(:class:`FreeQuadraticSystem`) with selectable strategy serves as an
independent oracle for the memoized one.

Indices are 0-based internally; reports print them 1-based.
"""
from __future__ import annotations

import itertools
import sys
import threading
from contextlib import contextmanager
from dataclasses import dataclass, field
from typing import Mapping, NamedTuple, Sequence

from .errors import InputError, NonterminationError, PBWError, ResourceCapError, StepCapExceeded
from .field import QQ, Field
from .linalg import EchelonBasis
from .order import MatrixOrder
from .polynomial import Polynomial, add_scaled, generator, mono_add, unit

DEFAULT_STEP_CAP = 10**6

if sys.getrecursionlimit() < 8000:
    sys.setrecursionlimit(8000)


class NotSolvableError(PBWError):
    """The algebra is not of solvable type for the requested order."""


class RelationRHS(NamedTuple):
    lam: object
    tail: Polynomial


class ProductDecomposition(NamedTuple):
    leading_scalar: object
    leading_monomial: tuple
    lower: Polynomial


@dataclass
class CheckResult:
    name: str
    passed: bool
    witnesses: list = field(default_factory=list)
    lines: list = field(default_factory=list)
    algebra: object = None

    def __bool__(self):
        return self.passed

    @property
    def verdict(self) -> str:
        return "pass" if self.passed else "fail"


def _mono_str(names, m) -> str:
    parts = [g if e == 1 else f"{g}^{e}" for g, e in zip(names, m) if e]
    return "*".join(parts) or "1"


def _word_of(m) -> tuple:
    return tuple(i for i, e in enumerate(m) for _ in range(e))


class PBWRewriter:
    """Memoized normal forms of ``a_j * a^alpha`` and monomial products.

    Memo tables are plain dicts: entries are written once, after their value
    is complete, so concurrent readers at worst recompute an entry. Cycle
    detection and step counting are per thread.
    """

    def __init__(self, pres: "AlgebraPresentation"):
        self.n = pres.n
        self.one = pres.field.one
        self.rhs = pres.rhs
        self._gen: dict = {}
        self._mono: dict = {}
        self._local = threading.local()

    # per-thread bookkeeping

    def _st(self):
        st = self._local
        if not hasattr(st, "active"):
            st.active = set()
            st.steps = 0
            st.cap = None
            st.depth = 0
        return st

    @contextmanager
    def session(self, cap: int | None):
        st = self._st()
        outer = st.depth == 0
        if outer:
            st.steps = 0
            st.cap = cap
        st.depth += 1
        try:
            yield st
        finally:
            st.depth -= 1
            if outer:
                st.cap = None

    @property
    def steps(self) -> int:
        return self._st().steps

    # kernels

    def mul_gen(self, j: int, alpha: tuple) -> dict:
        """Normal form of ``a_j * a^alpha`` (read-only dict)."""
        for i in range(j):
            if alpha[i]:
                break
        else:
            e = list(alpha)
            e[j] += 1
            return {tuple(e): self.one}
        key = (j, alpha)
        hit = self._gen.get(key)
        if hit is not None:
            return hit
        st = self._st()
        if key in st.active:
            raise NonterminationError(key)
        st.steps += 1
        if st.cap is not None and st.steps > st.cap:
            raise StepCapExceeded(st.cap)
        st.active.add(key)
        try:
            rest = list(alpha)
            rest[i] -= 1
            rest = tuple(rest)
            out: dict = {}
            for t, c in self.rhs[(j, i)].items():
                add_scaled(out, self.mono_mul(t, rest), c)
        finally:
            st.active.discard(key)
        self._gen[key] = out
        return out

    def mul_gen_terms(self, j: int, terms: Mapping) -> dict:
        acc: dict = {}
        for m, c in terms.items():
            for i in range(j):
                if m[i]:
                    add_scaled(acc, self.mul_gen(j, m), c)
                    break
            else:
                e = list(m)
                e[j] += 1
                e = tuple(e)
                s = acc.get(e)
                if s is None:
                    acc[e] = c
                else:
                    s = s + c
                    if s:
                        acc[e] = s
                    else:
                        del acc[e]
        return acc

    def mono_mul(self, a: tuple, b: tuple) -> dict:
        """Normal form of ``a^a * a^b`` (read-only dict)."""
        top = -1
        for k in range(self.n - 1, -1, -1):
            if a[k]:
                top = k
                break
        if top < 0:
            return {b: self.one}
        low = next((k for k in range(self.n) if b[k]), self.n)
        if top <= low:
            return {mono_add(a, b): self.one}
        key = (a, b)
        hit = self._mono.get(key)
        if hit is not None:
            return hit
        res: Mapping = {b: self.one}
        for k in range(top, -1, -1):
            for _ in range(a[k]):
                res = self.mul_gen_terms(k, res)
        self._mono[key] = res
        return res

    def mul(self, p: Mapping, q: Mapping) -> dict:
        acc: dict = {}
        for a, ca in p.items():
            for b, cb in q.items():
                add_scaled(acc, self.mono_mul(a, b), ca * cb)
        return acc

    def word(self, w: Sequence[int]) -> dict:
        res: Mapping = {unit(self.n): self.one}
        for letter in reversed(w):
            res = self.mul_gen_terms(letter, res)
        return dict(res)


class FreeQuadraticSystem:
    """Rewriting rules ``X_j X_i -> r_ji`` on words, for ``j > i``."""

    def __init__(self, pres: "AlgebraPresentation"):
        self.n = pres.n
        self.one = pres.field.one
        self.rules = {
            ji: [(_word_of(t), c) for t, c in rhs.items()] for ji, rhs in pres.rhs.items()
        }

    def leading_words(self) -> set:
        return set(self.rules)

    def _descent(self, w, strategy):
        positions = range(len(w) - 1)
        if strategy == "rightmost":
            positions = reversed(positions)
        for k in positions:
            if w[k] > w[k + 1]:
                return k
        return None

    def normal_form(self, word: Sequence[int], strategy: str = "leftmost",
                    cap: int | None = DEFAULT_STEP_CAP) -> Polynomial:
        if strategy not in ("leftmost", "rightmost"):
            raise InputError(f"unknown rewriting strategy {strategy!r}")
        if any(not 0 <= x < self.n for x in word):
            raise InputError(f"word {tuple(word)} uses unknown generators")
        state = {tuple(word): self.one}
        done: dict = {}
        steps = 0
        while state:
            w, c = state.popitem()
            k = self._descent(w, strategy)
            if k is None:
                m = [0] * self.n
                for x in w:
                    m[x] += 1
                add_scaled(done, {tuple(m): c}, 1)
                continue
            steps += 1
            if cap is not None and steps > cap:
                raise StepCapExceeded(cap)
            head, tail = w[:k], w[k + 2:]
            for rw, rc in self.rules[(w[k], w[k + 1])]:
                add_scaled(state, {head + rw + tail: c * rc}, 1)
        return Polynomial(done, self.n)


class AlgebraPresentation:
    """Generators, field, degree weights and one relation per descending pair."""

    def __init__(self, names: Sequence[str], relations: Mapping | None = None, *,
                 field: Field = QQ, weights: Sequence[int] | None = None,
                 name: str | None = None, strict: bool = False,
                 step_cap: int = DEFAULT_STEP_CAP):
        names = tuple(names)
        if not names:
            raise InputError("an algebra needs at least one generator")
        if len(set(names)) != len(names):
            raise InputError(f"generator names must be distinct: {names}")
        n = len(names)
        weights = tuple(int(w) for w in (weights if weights is not None else [1] * n))
        if len(weights) != n or any(w < 1 for w in weights):
            raise InputError(f"weights must be {n} positive integers, got {weights}")
        self.name = name
        self.names = names
        self.n = n
        self.field = field
        self.weights = weights
        self.step_cap = step_cap
        self.rhs: dict = {}
        relations = dict(relations or {})
        for (j, i), r in relations.items():
            if not (0 <= i < j < n):
                raise InputError(f"relation pair ({j + 1},{i + 1}) must satisfy n >= j > i >= 1")
            terms = r.terms if isinstance(r, Polynomial) else r
            conv = {}
            for m, c in terms.items():
                if len(m) != n:
                    raise InputError(f"relation ({j + 1},{i + 1}) has a monomial of wrong length")
                c = field(c)
                if c:
                    conv[tuple(m)] = c
            self.rhs[(j, i)] = conv
        for j in range(n):
            for i in range(j):
                if (j, i) not in self.rhs:
                    if strict:
                        raise InputError(f"strict mode: relation for pair ({j + 1},{i + 1}) missing")
                    self.rhs[(j, i)] = {mono_add(generator(n, i), generator(n, j)): field.one}
        self._rewriter = PBWRewriter(self)
        self._pbw: CheckResult | None = None
        self._validated: dict = {}

    def __repr__(self):
        return f"AlgebraPresentation({self.name or '?'}: {' '.join(self.names)})"

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise InputError(f"unknown generator {name!r}") from None

    def relation(self, j: int, i: int) -> RelationRHS:
        rhs = dict(self.rhs[(j, i)])
        lam = rhs.pop(mono_add(generator(self.n, i), generator(self.n, j)), self.field.zero)
        return RelationRHS(lam, Polynomial(rhs, self.n))

    def relation_poly(self, j: int, i: int) -> Polynomial:
        return Polynomial(self.rhs[(j, i)], self.n)

    def free_system(self) -> FreeQuadraticSystem:
        return FreeQuadraticSystem(self)

    @property
    def rewriter(self) -> PBWRewriter:
        return self._rewriter

    def poly(self, terms: Mapping) -> Polynomial:
        return Polynomial({m: self.field(c) for m, c in terms.items()}, self.n)

    def gen(self, i: int) -> Polynomial:
        return Polynomial.monomial(generator(self.n, i), self.field.one)

    def one(self) -> Polynomial:
        return Polynomial.constant(self.field.one, self.n)

    def validated(self, order: MatrixOrder) -> "ValidatedAlgebra":
        """Return the algebra validated for ``order`` or raise NotSolvableError."""
        res = solvable_check(self, order)
        if not res.passed:
            raise NotSolvableError(
                f"{self.name or 'algebra'} is not solvable for {order}: " + "; ".join(res.lines))
        return res.algebra


class ValidatedAlgebra:
    """A presentation certified PBW and of solvable type for ``order``."""

    def __init__(self, presentation: AlgebraPresentation, order: MatrixOrder):
        self.presentation = presentation
        self.order = order
        self.pbw_ok = True
        self.solvable_ok = True

    @property
    def n(self):
        return self.presentation.n

    @property
    def field(self):
        return self.presentation.field

    @property
    def names(self):
        return self.presentation.names

    @property
    def weights(self):
        return self.presentation.weights

    def multiply(self, p: Polynomial, q: Polynomial) -> Polynomial:
        rw = self.presentation.rewriter
        with rw.session(None):
            return Polynomial._wrap(rw.mul(p.terms, q.terms), self.n)

    def mono_times(self, alpha: tuple, g: Polynomial) -> Polynomial:
        """``a^alpha * g``."""
        rw = self.presentation.rewriter
        acc: dict = {}
        with rw.session(None):
            for b, c in g.items():
                add_scaled(acc, rw.mono_mul(alpha, b), c)
        return Polynomial._wrap(acc, self.n)

    def product(self, alpha: tuple, beta: tuple) -> ProductDecomposition:
        rw = self.presentation.rewriter
        with rw.session(None):
            terms = dict(rw.mono_mul(tuple(alpha), tuple(beta)))
        top = mono_add(alpha, beta)
        lam = terms.pop(top, self.field.zero)
        return ProductDecomposition(lam, top, Polynomial._wrap(terms, self.n))


# --- checks -------------------------------------------------------------------


def normal_form_word(pres: AlgebraPresentation, word: Sequence[int], strategy: str = "memo",
                     cap: int | None = None) -> Polynomial:
    """PBW normal form of a word in the generators.

    ``strategy='memo'`` uses the memoized engine; ``'leftmost'`` and
    ``'rightmost'`` run plain word rewriting with that rule selection.
    """
    cap = pres.step_cap if cap is None else cap
    if strategy != "memo":
        return pres.free_system().normal_form(word, strategy, cap)
    if any(not 0 <= x < pres.n for x in word):
        raise InputError(f"word {tuple(word)} uses unknown generators")
    rw = pres.rewriter
    with rw.session(cap):
        return Polynomial._wrap(rw.word(word), pres.n)


def pbw_check(pres: AlgebraPresentation, cap: int | None = None) -> CheckResult:
    """Resolve every overlap ``X_k X_j X_i`` (k > j > i) both ways and compare."""
    if pres._pbw is not None and cap is None:
        return pres._pbw
    cap = pres.step_cap if cap is None else cap
    rw = pres.rewriter
    n = pres.n
    result = CheckResult("pbw", True)
    for k in range(n):
        for j in range(k):
            for i in range(j):
                ei = generator(n, i)
                with rw.session(cap):
                    left: dict = {}
                    for t, c in pres.rhs[(k, j)].items():
                        add_scaled(left, rw.mono_mul(t, ei), c)
                with rw.session(cap):
                    right = rw.mul_gen_terms(k, pres.rhs[(j, i)])
                if left != right:
                    result.passed = False
                    result.witnesses.append(
                        ((k + 1, j + 1, i + 1), Polynomial(left, n), Polynomial(right, n)))
                    result.lines.append(f"overlap ({k + 1},{j + 1},{i + 1}) does not resolve")
                    pres._pbw = result
                    return result
    result.lines.append(f"all {n * (n - 1) * (n - 2) // 6} overlaps resolve")
    pres._pbw = result
    return result


def solvable_check(pres: AlgebraPresentation, order: MatrixOrder) -> CheckResult:
    """Every relation must read ``a_j a_i = lam a_i a_j + lower`` with lam != 0."""
    hit = pres._validated.get(order.rows)
    if hit is not None:
        return hit
    if order.n != pres.n:
        raise InputError(f"order has {order.n} columns, algebra has {pres.n} generators")
    result = CheckResult("solvable", True)
    pbw = pbw_check(pres)
    if not pbw.passed:
        result.passed = False
        result.lines.append("no PBW basis: " + "; ".join(pbw.lines))
        pres._validated[order.rows] = result
        return result
    n = pres.n
    for j in range(n):
        for i in range(j):
            lam, tail = pres.relation(j, i)
            target = mono_add(generator(n, i), generator(n, j))
            if not lam:
                result.passed = False
                result.witnesses.append((j + 1, i + 1))
                result.lines.append(f"pair ({j + 1},{i + 1}): coefficient of "
                                    f"{_mono_str(pres.names, target)} is zero")
            elif tail and not order.less(tail.leading_monomial(order), target):
                result.passed = False
                result.witnesses.append((j + 1, i + 1))
                high = [m for m, _ in tail.sorted_terms(order) if not order.less(m, target)]
                word = "monomial" if len(high) == 1 else "monomials"
                result.lines.append(
                    f"pair ({j + 1},{i + 1}): tail {word} "
                    f"{', '.join(_mono_str(pres.names, m) for m in high)} "
                    f"not below {_mono_str(pres.names, target)}")
    if result.passed:
        result.algebra = ValidatedAlgebra(pres, order)
        result.lines.append("all relations have lower tails")
    pres._validated[order.rows] = result
    return result


def filtration_compat_check(pres: AlgebraPresentation) -> CheckResult:
    """Relations may only produce quadratic, linear and constant terms."""
    result = CheckResult("filtration", True)
    for (j, i), rhs in sorted(pres.rhs.items()):
        bad = sorted((m for m in rhs if sum(m) > 2), key=lambda m: (-sum(m), m))
        if bad:
            result.passed = False
            result.witnesses.append(((j + 1, i + 1), bad[0]))
            result.lines.append(f"pair ({j + 1},{i + 1}): term {_mono_str(pres.names, bad[0])} "
                                f"has degree {sum(bad[0])} > 2")
    if result.passed:
        result.lines.append("every relation has degree <= 2")
    return result


def filtration_probe(pres: AlgebraPresentation, m: int, *, max_m: int = 6, max_n: int = 4) -> int:
    """Dimension of the span of all words of length <= m, after normal forms."""
    if m < 0:
        raise InputError("degree bound must be nonnegative")
    if m > max_m or pres.n > max_n:
        raise ResourceCapError("filtration-probe", f"m <= {max_m}, n <= {max_n}")
    if not pbw_check(pres).passed:
        raise InputError("filtration probe needs a PBW presentation")
    basis = EchelonBasis()
    for length in range(m + 1):
        for w in itertools.product(range(pres.n), repeat=length):
            basis.insert(normal_form_word(pres, w).terms)
    return len(basis)


def graded_orders(pres: AlgebraPresentation):
    """Weighted graded orders for ``pres``: default tie-break first, then every
    other tie permutation in lexicographic order."""
    from .order import graded

    default = tuple(range(pres.n - 1, -1, -1))
    yield graded(pres.weights, default)
    for tie in itertools.permutations(range(pres.n)):
        if tie != default:
            yield graded(pres.weights, tie)


def default_graded_order(pres: AlgebraPresentation, max_tries: int = 720) -> MatrixOrder | None:
    """First degree-compatible order under which ``pres`` is solvable, if any."""
    for order in itertools.islice(graded_orders(pres), max_tries):
        if solvable_check(pres, order).passed:
            return order
    return None


@dataclass
class StructureReport:
    pbw: CheckResult
    filtration: CheckResult
    domain: str
    gk_dim_equals_n: bool
    elimination_guaranteed: bool
    lines: list = field(default_factory=list)

    def format(self) -> str:
        return "\n".join(self.lines)


def structure_report(pres: AlgebraPresentation, order: MatrixOrder | None = None) -> StructureReport:
    """PBW basis, filtration compatibility and domain evidence, with conclusions.

    Being a domain is undecidable in general; only class membership (solvable
    type, binomial skew polynomial ring) is reported as evidence.
    """
    from .bsp import BSPPresentation, bsp_check
    from .order import lex

    pbw = pbw_check(pres)
    filt = filtration_compat_check(pres)
    domain = "unknown"
    if pbw.passed:
        solvable = order is not None and solvable_check(pres, order).passed
        solvable = solvable or default_graded_order(pres) is not None
        solvable = solvable or solvable_check(pres, lex(pres.n)).passed
        if solvable:
            domain = "domain (solvable polynomial algebra, Kandri-Rody-Weispfenning)"
        else:
            try:
                if bsp_check(BSPPresentation.from_algebra(pres)).passed:
                    domain = "domain (binomial skew polynomial ring, Gateva-Ivanova)"
            except InputError:
                pass
    gk_n = pbw.passed and filt.passed
    known_domain = domain != "unknown"
    lines = [
        f"(1) PBW basis: {pbw.verdict}",
        f"(2) filtration compatibility: {filt.verdict}",
        f"(3) domain: {domain}",
    ]
    if gk_n:
        lines.append(f"conclusion: GK.dim A = {pres.n} (filtrations coincide)")
    if gk_n and known_domain:
        lines.append("conclusion: GK.dim(A/L) < n for every nonzero left ideal L (elimination property holds)")
    elif domain.startswith("domain (solvable"):
        lines.append("conclusion: filtration condition fails, but solvable type still gives "
                     "GK.dim(A/L) < n for every nonzero left ideal L")
    else:
        lines.append("conclusion: criteria inconclusive")
    return StructureReport(pbw, filt, domain, gk_n,
                           (gk_n and known_domain) or domain.startswith("domain (solvable"), lines)

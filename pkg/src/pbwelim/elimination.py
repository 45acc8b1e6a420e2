"""Elimination orders, V(U) intersections and the elimination-lemma certificate.

For a nonzero left ideal L with d = GK.dim(A/L) < n, every set U of d+1
generators should meet L nontrivially: V(U) ∩ L != 0, where V(U) is the span
of monomials supported in U. A witness is found either from a Groebner
basis under an elimination order for U (complete), or by linear algebra on
the degree-truncated span of U-monomials (complete only up to the bound).
"""
from __future__ import annotations

import dataclasses
import itertools
import logging
import random
import threading
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .algebra import AlgebraPresentation, solvable_check
from .dimension import NEG_INF, DimensionReport, gk_dim_quotient
from .errors import ConsistencyError, InputError, ResourceCapError
from .groebner import Caps, LeftIdeal, _normal_form
from .linalg import EchelonBasis
from .order import MatrixOrder, elimination, lex
from .polynomial import Polynomial, add_scaled, weighted_degree

log = logging.getLogger(__name__)

MAX_LEX_PERMUTATIONS = 720
DEFAULT_CEILING = 48
SAMPLE_ABOVE_N = 8
SAMPLE_SIZE = 50
SAMPLE_SEED = 0
MAX_COLUMNS = 200_000
# effort budget (see Caps.max_work) for the elimination-order basis attempt during
# certification; past it the subset falls back to the truncated search
ELIMINATION_WORK = 3 * 10**7


def _subset(U, n) -> tuple:
    U = tuple(sorted(set(int(i) for i in U)))
    if not U:
        raise InputError("the subset U must be nonempty")
    if U[0] < 0 or U[-1] >= n:
        raise InputError(f"subset {U} out of range for {n} generators")
    return U


def candidate_orders(pres: AlgebraPresentation, U: Sequence[int]):
    """The block order first, then lex orders with every U-generator least."""
    n = pres.n
    U = _subset(U, n)
    yield elimination(n, U, pres.weights)
    rest = [i for i in range(n) if i not in U]
    count = 0
    for top in itertools.permutations(rest):
        for bottom in itertools.permutations(U):
            if count >= MAX_LEX_PERMUTATIONS:
                return
            count += 1
            yield lex(n, top + bottom)


def find_elimination_order(pres: AlgebraPresentation, U: Sequence[int]) -> MatrixOrder | None:
    """First candidate order under which ``pres`` is solvable, or ``None``."""
    for order in candidate_orders(pres, U):
        if solvable_check(pres, order).passed:
            return order
    return None


def eliminate(ideal: LeftIdeal, U: Sequence[int], order: MatrixOrder | None = None,
              caps: Caps | None = None) -> list:
    """Reduced basis elements supported in U; empty means V(U) ∩ L = 0."""
    U = _subset(U, ideal.algebra.n)
    order = order or find_elimination_order(ideal.algebra, U)
    if order is None:
        raise InputError(f"no elimination order available for U = {tuple(i + 1 for i in U)}")
    gb = ideal.groebner(order, caps)
    return [g for g in gb if g.supported_in(U)]


def degree_schedule(ceiling: int = DEFAULT_CEILING) -> list:
    sched = [D for D in (2, 4, 6) if D <= ceiling]
    D = 12
    while D < ceiling:
        sched.append(D)
        D *= 2
    if not sched or sched[-1] != ceiling:
        sched.append(ceiling)
    return sched


@dataclass
class TruncationResult:
    witness: Polynomial | None
    bound: int
    columns: int

    @property
    def status(self) -> str:
        return "witness" if self.witness is not None else "empty-at-bound"


def _u_monomials(n, U, weights, D):
    """Monomials supported in U of weighted degree <= D, by degree then exponents."""
    out = []

    def rec(k, e, deg):
        if k == len(U):
            out.append((deg, tuple(e)))
            return
        i = U[k]
        x = 0
        while deg + x * weights[i] <= D:
            e[i] = x
            rec(k + 1, e, deg + x * weights[i])
            x += 1
        e[i] = 0

    rec(0, [0] * n, 0)
    out.sort()
    return [m for _, m in out]


class _Truncation:
    """Incremental kernel search of V(U)_{<=D} -> A/L, one degree bound at a time."""

    def __init__(self, ideal: LeftIdeal, U, order: MatrixOrder, caps):
        self.ideal = ideal
        self.U = U
        self.order = order
        self.gb = ideal.groebner(order, caps)
        self.n = ideal.algebra.n
        key = order.key
        # standard-monomial columns are eliminated first; tags record the combination
        self.echelon = EchelonBasis(lambda c: (1,) + key(c[1]) if c[0] == "tag" else (0,) + key(c))
        self.done: set = set()
        self.prepared = [(g.leading_monomial(order), g.terms) for g in self.gb]

    def run(self, D: int, max_columns: int = MAX_COLUMNS):
        pres = self.ideal.algebra
        rw = pres.rewriter
        mons = _u_monomials(self.n, self.U, pres.weights, D)
        if len(mons) > max_columns:
            raise ResourceCapError("matrix-columns", max_columns)
        one = pres.field.one
        with rw.session(None):
            for m in mons:
                if m in self.done:
                    continue
                self.done.add(m)
                nf, _ = _normal_form(rw, self.order.key, {m: one}, self.prepared)
                vec = dict(nf)
                vec[("tag", m)] = one
                red = self.echelon.reduce(vec)
                if self.echelon.lead(red)[0] == "tag":
                    w = {c[1]: v for c, v in red.items()}
                    return Polynomial._wrap(w, self.n).monic(self.order), len(mons)
                self.echelon.insert(red)
        return None, len(mons)


def _products_method(ideal, U, D, order, caps, max_columns):
    pres = ideal.algebra
    gb = ideal.groebner(order, caps)
    alg = gb.algebra
    n, w = pres.n, pres.weights
    Uset = set(U)
    key = order.key

    def prio(c):
        inside = all(e == 0 or i in Uset for i, e in enumerate(c))
        return (1 if inside else 0,) + tuple(-x for x in key(c))

    echelon = EchelonBasis(prio)
    cols: set = set()
    all_mons = _u_monomials(n, tuple(range(n)), w, D)
    for g in gb:
        dg = weighted_degree(g.leading_monomial(order), w)
        for m in all_mons:
            if weighted_degree(m, w) + dg > D:
                continue
            row = alg.mono_times(m, g)
            cols.update(row.terms)
            if len(cols) > max_columns:
                raise ResourceCapError("matrix-columns", max_columns)
            echelon.insert(row.terms)
    for col, row in sorted(echelon.pivots.items(), key=lambda cr: prio(cr[0])):
        if prio(col)[0] == 1:
            return Polynomial._wrap(dict(row), n).monic(order), len(cols)
    return None, len(cols)


def truncated_intersection(ideal: LeftIdeal, U: Sequence[int], D: int, *,
                           order: MatrixOrder | None = None, method: str = "normal-form",
                           caps: Caps | None = None, max_columns: int = MAX_COLUMNS) -> TruncationResult:
    """Search V(U) ∩ L among elements of weighted degree <= D.

    ``method='normal-form'`` finds a linear dependency among the normal forms
    of the U-monomials; ``method='products'`` row-reduces the span of all
    products a^m * g of degree <= D with non-U columns eliminated first.
    """
    U = _subset(U, ideal.algebra.n)
    if D < 0:
        raise InputError("degree bound must be nonnegative")
    order = order or ideal.default_order()
    if method == "normal-form":
        w, cols = _Truncation(ideal, U, order, caps).run(D, max_columns)
    elif method == "products":
        if not order.is_degree_compatible(ideal.algebra.weights):
            raise InputError("the products method needs a degree-compatible order")
        w, cols = _products_method(ideal, U, D, order, caps, max_columns)
    else:
        raise InputError(f"unknown truncation method {method!r}")
    return TruncationResult(w, D, cols)


# --- certification --------------------------------------------------------------


@dataclass
class SubsetOutcome:
    U: tuple
    method: str | None
    witness: Polynomial | None
    status: str  # witness | independent | inconclusive
    detail: str
    order: MatrixOrder | None = None
    notes: list = field(default_factory=list)


@dataclass
class EliminationReport:
    names: tuple
    n: int
    dimension: DimensionReport
    outcomes: list
    sampled: bool
    message: str = ""

    @property
    def d(self):
        return self.dimension.gk_dim

    @property
    def witnesses(self) -> int:
        return sum(1 for o in self.outcomes if o.status == "witness")

    @property
    def inconclusive(self) -> int:
        return sum(1 for o in self.outcomes if o.status == "inconclusive")

    @property
    def independent(self) -> int:
        return sum(1 for o in self.outcomes if o.status == "independent")

    @property
    def all_witnessed(self) -> bool:
        return self.witnesses == len(self.outcomes)

    def format(self) -> str:
        from .syntax import format_poly

        d = "-inf" if self.d == NEG_INF else str(self.d)
        lines = [f"GK.dim(A/L) = {d}, n = {self.n}"]
        if self.message:
            lines.append(self.message)
        if self.outcomes:
            rows = []
            for o in self.outcomes:
                subset = "{" + ",".join(self.names[i] for i in o.U) + "}"
                if o.witness is not None:
                    result = format_poly(o.witness, self.names, o.order)
                else:
                    result = f"{o.status} ({o.detail})"
                rows.append((subset, o.method or "-", result))
            width = [max(len(r[k]) for r in rows + [("subset", "method", "")]) for k in range(2)]
            lines.append(f"{'subset':<{width[0]}}  {'method':<{width[1]}}  witness-or-status")
            for s, m, r in rows:
                lines.append(f"{s:<{width[0]}}  {m:<{width[1]}}  {r}")
            scope = "sampled" if self.sampled else "all"
            lines.append(f"summary: {len(self.outcomes)} subsets ({scope}), {self.witnesses} witnesses, "
                         f"{self.independent} independent, {self.inconclusive} inconclusive")
        return "\n".join(lines)


def examined_subsets(n: int, size: int, sample: int = SAMPLE_SIZE, seed: int = SAMPLE_SEED):
    """All ``size``-subsets when n <= 8, else a fixed-seed sample in canonical order."""
    combos = list(itertools.combinations(range(n), size))
    if n <= SAMPLE_ABOVE_N or len(combos) <= sample:
        return combos, False
    return sorted(random.Random(seed).sample(combos, sample)), True


def _certify_subset(ideal: LeftIdeal, U: tuple, caps, ceiling: int, graded: MatrixOrder) -> SubsetOutcome:
    pres = ideal.algebra
    notes = []
    order = find_elimination_order(pres, U)
    if order is not None:
        base = caps or Caps()
        work = ELIMINATION_WORK if base.max_work is None else min(base.max_work, ELIMINATION_WORK)
        try:
            found = eliminate(ideal, U, order, dataclasses.replace(base, max_work=work))
        except ResourceCapError as exc:
            notes.append(f"elimination basis: {exc}")
        else:
            if found:
                return SubsetOutcome(U, "elimination-GB", found[0], "witness", order.label or "", order, notes)
            return SubsetOutcome(U, "elimination-GB", None, "independent",
                                 "basis has no element in V(U)", order, notes)
    else:
        notes.append("order-unavailable")
    search = _Truncation(ideal, U, graded, caps)
    bound = 0
    for D in degree_schedule(ceiling):
        log.info("U=%s: truncated search at degree bound %d", tuple(i + 1 for i in U), D)
        try:
            w, _ = search.run(D)
        except ResourceCapError as exc:
            notes.append(str(exc))
            break
        bound = D
        if w is not None:
            return SubsetOutcome(U, "truncated-oracle", w, "witness", f"D={D}", graded, notes)
    return SubsetOutcome(U, "truncated-oracle", None, "inconclusive",
                         "; ".join(notes + [f"empty up to D={bound}"]), graded, notes)


def _verify(ideal: LeftIdeal, outcome: SubsetOutcome, graded: MatrixOrder):
    w = outcome.witness
    if w is None:
        return
    if not w:
        raise ConsistencyError(f"zero witness for U={outcome.U}")
    if not w.supported_in(outcome.U):
        raise ConsistencyError(f"witness for U={outcome.U} leaves V(U)")
    if ideal.groebner(graded).reduce(w):
        raise ConsistencyError(f"witness for U={outcome.U} is not in the ideal")


def certify_elimination_property(ideal: LeftIdeal, order: MatrixOrder | None = None,
                                 caps: Caps | None = None, jobs: int = 1,
                                 ceiling: int = DEFAULT_CEILING,
                                 sample: int = SAMPLE_SIZE, seed: int = SAMPLE_SEED) -> EliminationReport:
    """Look for a nonzero element of V(U) ∩ L for every examined U of size d + 1."""
    pres = ideal.algebra
    dim = gk_dim_quotient(ideal, order, caps)
    graded = dim.order
    d = dim.gk_dim
    if d == NEG_INF:
        return EliminationReport(pres.names, pres.n, dim, [], False,
                                 "zero quotient: the elimination lemma is vacuous")
    if d >= pres.n:
        return EliminationReport(pres.names, pres.n, dim, [], False,
                                 "GK.dim(A/L) >= n: the elimination lemma does not apply "
                                 "(unexpected for a domain; flag as a bug)")
    subsets, sampled = examined_subsets(pres.n, d + 1, sample, seed)

    def work(U):
        out = _certify_subset(ideal, U, caps, ceiling, graded)
        _verify(ideal, out, graded)
        return out

    if jobs > 1 and len(subsets) > 1:
        old = threading.stack_size()
        threading.stack_size(64 * 1024 * 1024)
        try:
            with ThreadPoolExecutor(max_workers=jobs) as pool:
                outcomes = list(pool.map(work, subsets))
        finally:
            threading.stack_size(old)
    else:
        outcomes = [work(U) for U in subsets]
    return EliminationReport(pres.names, pres.n, dim, outcomes, sampled)

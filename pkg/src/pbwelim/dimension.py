"""Staircases, standard-monomial counts and Gelfand-Kirillov dimension.

For a left ideal L with Groebner basis G under a degree-compatible order,
the monomials outside the staircase of LM(G) span A/L, and the growth
degree of their count by weighted degree is GK.dim(A/L). That degree equals
the largest size of an index set U such that no staircase generator is
supported inside U; :func:`hilbert_degree` recovers it independently from
the counts.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import networkx as nx

from . import _kernels
from .errors import ConsistencyError, InputError
from .groebner import graded_groebner
from .order import MatrixOrder
from .polynomial import divides, mono_lcm, weighted_degree

NEG_INF = float("-inf")
MAX_SUBSET_N = 16
HILBERT_CAP = 60


class StaircaseIdeal:
    """Monomial ideal given by its minimal generators (an antichain)."""

    def __init__(self, n: int, generators: Iterable[Sequence[int]] = ()):
        gens = sorted({tuple(int(x) for x in g) for g in generators})
        for g in gens:
            if len(g) != n or any(x < 0 for x in g):
                raise InputError(f"staircase generator {g} is not an exponent vector of length {n}")
        minimal = [g for g in gens if not any(h != g and divides(h, g) for h in gens)]
        self.n = n
        self.generators = tuple(minimal)

    def __contains__(self, m) -> bool:
        return any(divides(g, m) for g in self.generators)

    def __eq__(self, other):
        return isinstance(other, StaircaseIdeal) and (self.n, self.generators) == (other.n, other.generators)

    def __hash__(self):
        return hash((self.n, self.generators))

    def __repr__(self):
        return f"StaircaseIdeal(n={self.n}, {list(self.generators)})"

    @property
    def is_unit(self) -> bool:
        return any(not any(g) for g in self.generators)

    def masks(self) -> list:
        return [sum(1 << i for i, e in enumerate(g) if e) for g in self.generators]


def staircase_of(gb) -> StaircaseIdeal:
    return StaircaseIdeal(gb.algebra.n, gb.leading_monomials)


def combinatorial_dim_witness(s: StaircaseIdeal):
    """``(d, U)``: the largest U (0-based, lexicographically first) avoiding every
    generator's support, or ``(-inf, None)`` for the unit ideal."""
    if s.n > MAX_SUBSET_N:
        raise InputError(f"subset search refused for n = {s.n} > {MAX_SUBSET_N}; "
                         "use hilbert_degree for an estimate")
    if s.is_unit:
        return NEG_INF, None
    if not s.generators:
        return s.n, tuple(range(s.n))
    size, mask = _kernels.max_free_subset(s.masks(), s.n)
    return size, tuple(i for i in range(s.n) if mask >> i & 1)


def combinatorial_dim(s: StaircaseIdeal):
    return combinatorial_dim_witness(s)[0]


@dataclass
class HilbertResult:
    degree: object  # int, NEG_INF, or None when inconclusive
    table: list  # cumulative standard-monomial counts for q = 0..Q
    start: int
    period: int
    conclusive: bool

    @property
    def status(self) -> str:
        return "ok" if self.conclusive else "inconclusive"


def _constant_differences(values) -> int | None:
    """Smallest k whose k-th differences are all equal over at least 3 entries."""
    vals = list(values)
    k = 0
    while len(vals) >= 3:
        if all(v == vals[0] for v in vals):
            return k
        vals = [b - a for a, b in zip(vals, vals[1:])]
        k += 1
    return None


def hilbert_degree(s: StaircaseIdeal, weights: Sequence[int] | None = None,
                   cap: int = HILBERT_CAP) -> HilbertResult:
    """Growth degree of the count of standard monomials of weighted degree <= q.

    The count is a quasi-polynomial in q with period lcm(weights) once q is at
    least the weighted degree of the lcm of all generators, so sampling each
    residue class over n + 3 periods from there pins the degree exactly.
    """
    n = s.n
    weights = tuple(int(w) for w in (weights if weights is not None else [1] * n))
    if len(weights) != n or any(w < 1 for w in weights):
        raise InputError(f"weights must be {n} positive integers")
    period = math.lcm(*weights)
    lcm = (0,) * n
    for g in s.generators:
        lcm = mono_lcm(lcm, g)
    start = weighted_degree(lcm, weights)
    need = start + (n + 3) * period - 1
    Q = min(need, cap)
    hist = _kernels.standard_histogram(list(s.generators), weights, Q)
    table = [int(x) for x in hist.cumsum()]
    if need > cap:
        return HilbertResult(None, table, start, period, False)
    if table[-1] == 0:
        return HilbertResult(NEG_INF, table, start, period, True)
    degrees = []
    for r in range(period):
        d = _constant_differences(table[start + r::period])
        if d is None:  # cannot happen inside the rigorous window
            return HilbertResult(None, table, start, period, False)
        degrees.append(d)
    return HilbertResult(max(degrees), table, start, period, True)


@dataclass
class DimensionReport:
    gk_dim: object
    max_independent_set: tuple | None
    hilbert_table: list
    hilbert: HilbertResult
    staircase: StaircaseIdeal
    n: int
    order: MatrixOrder | None = None
    weights: tuple = ()
    assumption: str | None = None
    names: tuple = field(default_factory=tuple)

    @property
    def star_condition(self) -> bool:
        """Whether GK.dim(A/L) < n, the applicability condition of the elimination lemma."""
        return self.gk_dim < self.n

    def to_csv(self) -> str:
        return "\n".join(["q,count"] + [f"{q},{c}" for q, c in enumerate(self.hilbert_table)]) + "\n"

    def format(self) -> str:
        names = self.names or tuple(f"a{i + 1}" for i in range(self.n))
        d = "-inf" if self.gk_dim == NEG_INF else str(self.gk_dim)
        lines = [f"gk_dim: {d}"]
        if self.max_independent_set is not None:
            lines.append("independent set: {" + ", ".join(names[i] for i in self.max_independent_set) + "}")
        lines.append("staircase: " + " ".join(str(list(g)) for g in self.staircase.generators))
        hd = self.hilbert.degree
        lines.append(f"growth-table degree: {'-inf' if hd == NEG_INF else hd} ({self.hilbert.status})")
        lines.append(f"(*) GK.dim(A/L) < n: {'yes' if self.star_condition else 'no'}")
        if self.assumption:
            lines.append(f"note: {self.assumption}")
        return "\n".join(lines)


def gk_dim_quotient(ideal, order: MatrixOrder | None = None, caps=None) -> DimensionReport:
    """GK dimension of A/L from the staircase of a graded left Groebner basis."""
    pres = ideal.algebra
    if order is None:
        gb = graded_groebner(ideal, caps)
        order = gb.order
    elif not order.is_degree_compatible(pres.weights):
        raise InputError(f"order {order} is not degree-compatible with weights {pres.weights}; "
                         "GK dimension is only read off staircases of graded orders")
    else:
        gb = ideal.groebner(order, caps)
    s = staircase_of(gb)
    d, U = combinatorial_dim_witness(s)
    hr = hilbert_degree(s, pres.weights)
    if hr.conclusive and hr.degree != d:
        raise ConsistencyError(f"staircase dimension {d} disagrees with growth degree {hr.degree}")
    note = None
    if set(pres.weights) != {1}:
        note = ("non-unit weights: staircase dimension is taken as GK.dim(A/L); "
                "growth-table evidence reported alongside")
    return DimensionReport(d, U, hr.table, hr, s, pres.n, order, pres.weights, note, pres.names)


# --- growth of the algebra itself ----------------------------------------------


class UfnarovskiGraph:
    """Edge i -> j iff the word X_i X_j is not a leading word."""

    def __init__(self, n: int, words: Iterable[Sequence[int]]):
        words = {tuple(w) for w in words}
        for w in words:
            if len(w) != 2:
                raise InputError(f"leading word {w} is not quadratic")
            if any(not 0 <= x < n for x in w):
                raise InputError(f"leading word {w} uses unknown generators")
        self.n = n
        self.words = frozenset(words)
        g = nx.DiGraph()
        g.add_nodes_from(range(n))
        g.add_edges_from((i, j) for i in range(n) for j in range(n) if (i, j) not in words)
        self.graph = g

    def gk_dim(self):
        g = self.graph
        comps = list(nx.strongly_connected_components(g))
        cyclic = {}
        for k, comp in enumerate(comps):
            sub = g.subgraph(comp)
            edges = sub.number_of_edges()
            if edges == 0:
                cyclic[k] = 0
            elif edges > len(comp):
                return math.inf  # two cycles through one vertex
            else:
                cyclic[k] = 1
        cond = nx.condensation(g, scc=comps)
        best = {}
        for v in nx.topological_sort(cond):
            here = cyclic[v]
            best[v] = here + max((best[u] for u in cond.predecessors(v)), default=0)
        return max(best.values(), default=0)


def ufnarovski_gk_dim(words: Iterable[Sequence[int]], n: int):
    """GK dimension of the monomial algebra with the given quadratic leading words;
    ``math.inf`` signals exponential growth."""
    return UfnarovskiGraph(n, words).gk_dim()


def leading_words(pres) -> set:
    return pres.free_system().leading_words()

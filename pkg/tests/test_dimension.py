"""Staircases, growth tables, GK dimension of quotients and of algebras."""
import itertools
import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from pbwelim import InputError, StaircaseIdeal, combinatorial_dim, gk_dim_quotient, solvable_check
from pbwelim import fixtures, hilbert_degree, ufnarovski_gk_dim
from pbwelim import _kernels
from pbwelim.dimension import NEG_INF, combinatorial_dim_witness, leading_words, staircase_of
from pbwelim.order import graded, lex
from pbwelim.suites import random_ideals, random_staircases


def _count_table(s, weights, Q):
    """Brute-force cumulative count of standard monomials of weighted degree <= q."""
    counts = [0] * (Q + 1)
    ranges = [range(Q // w + 1) for w in weights]
    for e in itertools.product(*ranges):
        d = sum(a * w for a, w in zip(e, weights))
        if d <= Q and e not in s:
            counts[d] += 1
    return list(itertools.accumulate(counts))


def _dim_by_subsets(s):
    """Largest set of variables on which no generator is supported, by plain enumeration."""
    if s.is_unit:
        return NEG_INF
    for r in range(s.n, -1, -1):
        for U in itertools.combinations(range(s.n), r):
            if not any(all(i in U for i, e in enumerate(g) if e) for g in s.generators):
                return r
    return NEG_INF


staircases = st.integers(1, 4).flatmap(lambda n: st.builds(
    StaircaseIdeal, st.just(n), st.lists(st.tuples(*[st.integers(0, 3)] * n), max_size=5)))


def test_staircase_examples():
    s = StaircaseIdeal(3, [(1, 0, 1), (0, 1, 1)])
    assert combinatorial_dim_witness(s) == (2, (0, 1))
    assert combinatorial_dim(StaircaseIdeal(4)) == 4
    assert combinatorial_dim(StaircaseIdeal(2, [(0, 0)])) == NEG_INF
    assert StaircaseIdeal(2, [(1, 1), (2, 1), (1, 3)]).generators == ((1, 1),)


def test_growth_examples():
    assert hilbert_degree(StaircaseIdeal(3, [(1, 0, 1), (0, 1, 1)])).degree == 2
    h = hilbert_degree(StaircaseIdeal(2))
    assert h.degree == 2
    assert h.table == [math.comb(q + 2, 2) for q in range(len(h.table))]
    h = hilbert_degree(StaircaseIdeal(2, [(1, 1)]))
    assert h.degree == 1 and h.table[:5] == [2 * q + 1 for q in range(5)]
    assert hilbert_degree(StaircaseIdeal(2, [(0, 0)])).degree == NEG_INF


def test_growth_cap_reports_inconclusive():
    h = hilbert_degree(StaircaseIdeal(2, [(40, 40)]), cap=30)
    assert not h.conclusive and h.degree is None and h.status == "inconclusive"


@given(staircases)
def test_growth_table_matches_brute_force(s):
    h = hilbert_degree(s)
    Q = min(len(h.table) - 1, 12)
    assert h.table[:Q + 1] == _count_table(s, [1] * s.n, Q)


@given(staircases, st.lists(st.integers(1, 3), min_size=4, max_size=4))
def test_dimension_oracles_agree(s, w):
    d = _dim_by_subsets(s)
    assert combinatorial_dim(s) == d
    h = hilbert_degree(s, w[:s.n])
    if h.conclusive:
        assert h.degree == d


def test_fixed_seed_staircases():
    for s in random_staircases(50, seed=0):
        h = hilbert_degree(s)
        assert h.conclusive
        assert h.degree == combinatorial_dim(s) == _dim_by_subsets(s)


def test_subset_search_refuses_large_n():
    with pytest.raises(InputError):
        combinatorial_dim(StaircaseIdeal(17, [(1,) * 17]))


@given(staircases)
def test_backends_agree(s):
    gens = list(s.generators)
    w = [1] * s.n
    a = _kernels.standard_histogram(gens, w, 10, backend="numpy")
    b = _kernels.standard_histogram(gens, w, 10, backend="numba")
    assert np.array_equal(a, b)
    assert _kernels.max_free_subset(s.masks(), s.n, backend="numpy") == \
        _kernels.max_free_subset(s.masks(), s.n, backend="numba")


# --- quotients ------------------------------------------------------------------------


def test_quotient_examples():
    dd = gk_dim_quotient(fixtures.load_ideal("dd"))
    assert dd.gk_dim == 2 and dd.max_independent_set == (0, 1)
    assert staircase_of(fixtures.load_ideal("dd").groebner(dd.order)).generators == ((0, 0, 0, 1), (0, 0, 1, 0))
    assert gk_dim_quotient(fixtures.load_ideal("unitw")).gk_dim == NEG_INF
    assert gk_dim_quotient(fixtures.load_ideal("dx")).gk_dim == 1
    assert gk_dim_quotient(fixtures.load_ideal("xzyz")).gk_dim == 2


def test_quotient_needs_graded_order():
    with pytest.raises(InputError):
        gk_dim_quotient(fixtures.load_ideal("linear2"), lex(3))


def test_quotient_independent_of_graded_tie():
    af = fixtures.load_algebra("sl2type")
    pres = af.presentation
    for I in random_ideals(pres, 10, seed=4, max_degree=2):
        dims = set()
        for tie in itertools.permutations(range(3)):
            o = graded([1, 1, 1], tie)
            if _solvable(pres, o):
                dims.add(gk_dim_quotient(I, o).gk_dim)
        assert len(dims) == 1


def _solvable(pres, o):
    return solvable_check(pres, o).passed


def test_csv_table():
    rep = gk_dim_quotient(fixtures.load_ideal("xzyz"))
    lines = rep.to_csv().splitlines()
    assert lines[0] == "q,count" and lines[1] == "0,1" and lines[2] == "1,4"


def test_weighted_quotient_has_note():
    rep = gk_dim_quotient(fixtures.load_ideal("ex4a"))
    assert rep.assumption and rep.gk_dim <= 2


# --- algebras ------------------------------------------------------------------------


def test_ufnarovski_examples():
    assert ufnarovski_gk_dim({(j, i) for j in range(3) for i in range(j)}, 3) == 3
    assert ufnarovski_gk_dim(set(itertools.product(range(3), repeat=2)), 3) == 0
    assert ufnarovski_gk_dim(set(), 1) == 1
    assert ufnarovski_gk_dim(set(), 2) == math.inf
    with pytest.raises(InputError):
        ufnarovski_gk_dim({(0, 1, 1)}, 2)


def _words_count(n, words, length):
    """Normal words of a given length avoiding the quadratic leading words."""
    count = 0
    for w in itertools.product(range(n), repeat=length):
        if all((a, b) not in words for a, b in zip(w, w[1:])):
            count += 1
    return count


@pytest.mark.parametrize("name", fixtures.SOLVABLE)
def test_solvable_fixtures_have_polynomial_growth_n(name):
    pres = fixtures.load_algebra(name).presentation
    words = leading_words(pres)
    assert ufnarovski_gk_dim(words, pres.n) == pres.n
    # normal words of length k are the PBW monomials of degree k
    for k in range(5):
        assert _words_count(pres.n, words, k) == math.comb(k + pres.n - 1, pres.n - 1)

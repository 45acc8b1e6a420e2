"""Rewriting, PBW and solvable-type checks, filtration checks."""
import itertools
from fractions import Fraction
from math import comb, factorial

import pytest
import sympy
from hypothesis import given, strategies as st

from pbwelim import (AlgebraPresentation, InputError, NotSolvableError, StepCapExceeded, Polynomial,
                     filtration_compat_check, filtration_probe, normal_form_word, pbw_check,
                     solvable_check, structure_report)
from pbwelim import fixtures
from pbwelim.order import graded, lex
from pbwelim.syntax import parse_algebra, parse_order

PBW_FIXTURES = ["weyl1", "weyl2", "qplane", "sl2type", "commutative3", "ex4", "heis"]


def _weyl_mono(a, b):
    """d^a x^b in A_1 as a dict over (x, d) exponents: sum_k C(a,k) b!/(b-k)! x^(b-k) d^(a-k)."""
    out = {}
    for k in range(min(a, b) + 1):
        out[(b - k, a - k)] = Fraction(comb(a, k) * factorial(b) // factorial(b - k))
    return out


def test_weyl_words(alg):
    A = alg("weyl1")
    assert normal_form_word(A, [1, 0]).terms == {(1, 1): 1, (0, 0): 1}
    assert normal_form_word(A, [0, 1]).terms == {(1, 1): 1}
    assert normal_form_word(A, [1, 0, 0]).terms == {(2, 1): 1, (1, 0): 2}


@pytest.mark.parametrize("a,b", [(a, b) for a in range(5) for b in range(5)])
def test_weyl_closed_formula(alg, a, b):
    A = alg("weyl1")
    word = [1] * a + [0] * b
    for strategy in ("memo", "leftmost", "rightmost"):
        assert normal_form_word(A, word, strategy).terms == _weyl_mono(a, b)


def test_quantum_plane_products(alg):
    A = alg("qplane")
    V = A.validated(graded([1, 1]))
    y2 = Polynomial({(0, 2): 1})
    x = Polynomial({(1, 0): 1})
    assert V.multiply(y2, x).terms == {(1, 2): 4}
    for a, b in itertools.product(range(4), repeat=2):
        assert normal_form_word(A, [1] * a + [0] * b).terms == {(b, a): Fraction(2) ** (a * b)}


def test_heisenberg_commutator(alg):
    A = alg("heis")
    for k in range(1, 6):
        expect = {(1, k, 0): 1, (0, k - 1, 1): -k}
        assert normal_form_word(A, [1] * k + [0]).terms == expect


words = st.lists(st.integers(0, 2), max_size=7)


@pytest.mark.parametrize("name", ["sl2type", "ex4", "heis", "commutative3"])
@given(w=words)
def test_rewriting_strategy_independent(name, w):
    A = fixtures.load_algebra(name).presentation
    memo = normal_form_word(A, w)
    assert normal_form_word(A, w, "leftmost") == memo
    assert normal_form_word(A, w, "rightmost") == memo


def _poly(draw_terms, n):
    return Polynomial({tuple(m): c for m, c in draw_terms}, n)


small_polys = st.lists(st.tuples(st.tuples(*[st.integers(0, 2)] * 3), st.integers(-3, 3)), max_size=3)


@pytest.mark.parametrize("name", ["sl2type", "ex4", "heis"])
@given(small_polys, small_polys, small_polys)
def test_associativity(name, a, b, c):
    A = fixtures.load_algebra(name)
    V = A.presentation.validated(A.orders.get("wgrlex") and parse_order("wgrlex", A.presentation, A.orders)
                                 or graded(A.presentation.weights))
    p, q, r = _poly(a, 3), _poly(b, 3), _poly(c, 3)
    assert V.multiply(V.multiply(p, q), r) == V.multiply(p, V.multiply(q, r))
    one = Polynomial.constant(1, 3)
    assert V.multiply(one, p) == p == V.multiply(p, one)


@pytest.mark.parametrize("name", ["weyl2", "sl2type", "heis", "qplane"])
def test_product_decomposition(alg, name):
    A = alg(name)
    order = graded(A.weights)
    V = A.validated(order)
    box = list(itertools.product(range(2), repeat=A.n))
    for alpha, beta in itertools.product(box, repeat=2):
        d = V.product(alpha, beta)
        assert d.leading_scalar != 0
        assert d.leading_monomial == tuple(a + b for a, b in zip(alpha, beta))
        assert all(order.less(m, d.leading_monomial) for m in d.lower.monomials())


def test_step_cap(alg):
    A = alg("weyl1")
    with pytest.raises(StepCapExceeded):
        normal_form_word(A, [1] * 6 + [0] * 6, "leftmost", cap=5)


# --- PBW and solvable type ------------------------------------------------------------


@pytest.mark.parametrize("name", PBW_FIXTURES)
def test_fixtures_have_pbw_bases(alg, name):
    assert pbw_check(alg(name)).passed


def test_jacobi_failure(alg):
    A = alg("jacobifail")
    res = pbw_check(A)
    assert not res.passed
    assert res.witnesses[0][0] == (3, 2, 1)
    # the two reductions of the overlap genuinely differ
    assert normal_form_word(A, [2, 1, 0], "leftmost") != normal_form_word(A, [2, 1, 0], "rightmost")


@given(st.fractions(max_denominator=5).filter(bool), st.fractions(max_denominator=5), st.integers(0, 6))
def test_ex4_family_pbw(lam, mu, f_degree):
    A = parse_algebra(fixtures.ex4_text(lam, mu, f_degree)).presentation
    assert pbw_check(A).passed


@given(st.dictionaries(st.tuples(st.integers(0, 2), st.integers(0, 2)), st.integers(-2, 2), max_size=4))
def test_two_generators_always_pbw(tail):
    A = AlgebraPresentation(["a", "b"], {(1, 0): tail})
    assert pbw_check(A).passed


def test_ex4_solvable_matrix():
    af = fixtures.load_algebra("ex4")
    A = af.presentation
    assert solvable_check(A, lex(3)).passed
    assert solvable_check(A, parse_order("wgrlex", A, af.orders)).passed
    assert solvable_check(A, graded([2, 1, 4], [0, 1, 2])).passed
    # weighted degree ties x1*x3 with x2^2*x3; the default tie-break puts x3 on top and fails
    assert not solvable_check(A, graded([2, 1, 4])).passed
    bad = solvable_check(A, graded([1, 1, 1]))
    assert not bad.passed
    assert bad.witnesses == [(3, 1)]
    assert "x2^2*x3" in bad.lines[0]
    with pytest.raises(NotSolvableError):
        A.validated(graded([1, 1, 1]))


def test_zero_lambda_is_not_solvable():
    A = AlgebraPresentation(["a", "b"], {(1, 0): {(0, 0): 1}})
    res = solvable_check(A, graded([1, 1]))
    assert not res.passed and "is zero" in res.lines[0]


def test_non_pbw_is_not_solvable(alg):
    assert not solvable_check(alg("jacobifail"), graded([1, 1, 1])).passed


# --- filtration --------------------------------------------------------------------------


def test_filtration_compat(alg):
    assert filtration_compat_check(alg("weyl1")).passed
    assert filtration_compat_check(alg("commutative3")).passed
    assert filtration_compat_check(alg("heis")).passed
    res = filtration_compat_check(alg("ex4"))
    assert not res.passed
    assert res.witnesses[0] == ((3, 1), (0, 2, 1)) or res.witnesses[0][0] == (3, 1)
    assert any("x2" in line for line in res.lines)


def _probe_oracle(A, m):
    """Rank of all words of length <= m, rewritten leftmost, via sympy."""
    rows, cols = [], {}
    for length in range(m + 1):
        for w in itertools.product(range(A.n), repeat=length):
            rows.append(normal_form_word(A, w, "leftmost").terms)
            for mono in rows[-1]:
                cols.setdefault(mono, len(cols))
    M = sympy.zeros(len(rows), max(len(cols), 1))
    for i, r in enumerate(rows):
        for mono, c in r.items():
            M[i, cols[mono]] = sympy.Rational(c.numerator, c.denominator)
    return M.rank()


@pytest.mark.parametrize("name,m", [("weyl1", 2), ("weyl1", 3), ("commutative3", 2), ("heis", 2), ("ex4", 2)])
def test_filtration_probe_against_rank_oracle(alg, name, m):
    A = alg(name)
    assert filtration_probe(A, m) == _probe_oracle(A, m)


def test_filtration_probe_values(alg):
    assert filtration_probe(alg("weyl1"), 2) == 6
    assert filtration_probe(alg("commutative3"), 2) == 10
    assert filtration_probe(alg("ex4"), 2) > 10
    with pytest.raises(InputError):
        filtration_probe(alg("jacobifail"), 1)


def test_structure_reports(alg):
    w = structure_report(alg("weyl1"))
    assert w.pbw.passed and w.filtration.passed and w.gk_dim_equals_n
    assert w.domain.startswith("domain")
    assert "GK.dim A = 2" in w.format()
    e = structure_report(alg("ex4"))
    assert e.pbw.passed and not e.filtration.passed
    assert not e.gk_dim_equals_n and e.elimination_guaranteed
    c = structure_report(alg("commutative3"))
    assert c.pbw.passed and c.filtration.passed and c.elimination_guaranteed
    j = structure_report(alg("jacobifail"))
    assert not j.pbw.passed and j.domain == "unknown"


def test_presentation_errors():
    with pytest.raises(InputError):
        AlgebraPresentation(["a", "a"])
    with pytest.raises(InputError):
        AlgebraPresentation(["a", "b"], {(0, 1): {(1, 1): 1}})
    with pytest.raises(InputError):
        AlgebraPresentation(["a", "b"], weights=[1, 0])
    with pytest.raises(InputError):
        AlgebraPresentation(["a", "b"], strict=True)

"""Elimination orders, truncated search and certification reports."""
import itertools

import pytest

from pbwelim import (InputError, Polynomial, certify_elimination_property, eliminate, find_elimination_order,
                     is_member, truncated_intersection)
from pbwelim import fixtures
from pbwelim.dimension import NEG_INF
from pbwelim.elimination import degree_schedule, examined_subsets
from pbwelim.order import graded, satisfies_elimination
from pbwelim.suites import random_ideals


def P(terms):
    return Polynomial(terms)


def proportional(a, b):
    """Equal up to a nonzero scalar; monic normalization depends on the order used."""
    if not a or not b or set(a.monomials()) != set(b.monomials()):
        return False
    m = next(iter(a.monomials()))
    return a * b.coefficient(m) == b * a.coefficient(m)


def test_order_examples():
    weyl2 = fixtures.load_algebra("weyl2").presentation
    o = find_elimination_order(weyl2, [0, 1, 3])
    assert o is not None and satisfies_elimination(o, [0, 1, 3])
    c3 = fixtures.load_algebra("commutative3").presentation
    assert find_elimination_order(c3, [0, 2]).rows[0] == (0, 1, 0)
    full = find_elimination_order(c3, [0, 1, 2])
    assert full.rows[0] == (1, 1, 1)


@pytest.mark.parametrize("name", ["weyl2", "sl2type", "ex4", "qplane"])
def test_found_orders_eliminate(name):
    pres = fixtures.load_algebra(name).presentation
    for r in range(1, pres.n + 1):
        for U in itertools.combinations(range(pres.n), r):
            o = find_elimination_order(pres, U)
            if o is not None:
                assert satisfies_elimination(o, U, bound=4)


def test_eliminate_examples():
    lin = fixtures.load_ideal("linear2")
    assert any(proportional(g, P({(1, 0, 0): 1, (0, 0, 1): -1})) for g in eliminate(lin, [0, 2]))
    mixed = fixtures.load_ideal("mixed")
    found = eliminate(mixed, [0, 1, 3])
    assert found and all(g.supported_in([0, 1, 3]) for g in found)
    assert eliminate(fixtures.load_ideal("dd"), [0, 1]) == []


def test_truncation_examples():
    lin = fixtures.load_ideal("linear2")
    for method in ("normal-form", "products"):
        res = truncated_intersection(lin, [0, 2], 1, method=method)
        assert proportional(res.witness, P({(1, 0, 0): 1, (0, 0, 1): -1}))
        assert res.status == "witness"
    dd = fixtures.load_ideal("dd")
    for method in ("normal-form", "products"):
        assert truncated_intersection(dd, [0, 1], 3, method=method).status == "empty-at-bound"
        assert truncated_intersection(lin, [0, 2], 0, method=method).status == "empty-at-bound"


def test_truncation_errors():
    lin = fixtures.load_ideal("linear2")
    with pytest.raises(InputError):
        truncated_intersection(lin, [], 2)
    with pytest.raises(InputError):
        truncated_intersection(lin, [0], -1)
    with pytest.raises(InputError):
        truncated_intersection(lin, [0], 2, method="guess")


def test_schedule():
    assert degree_schedule(6) == [2, 4, 6]
    assert degree_schedule(48) == [2, 4, 6, 12, 24, 48]
    assert degree_schedule(30) == [2, 4, 6, 12, 24, 30]


def test_sampling_is_deterministic():
    a, sa = examined_subsets(12, 4)
    b, sb = examined_subsets(12, 4)
    assert sa and sb and a == b and len(a) == 50 and a == sorted(a)
    full, s = examined_subsets(5, 2)
    assert not s and len(full) == 10


def test_certify_examples():
    rep = certify_elimination_property(fixtures.load_ideal("dd"))
    assert rep.d == 2 and len(rep.outcomes) == 4 and rep.all_witnessed
    lin = certify_elimination_property(fixtures.load_ideal("linear2"))
    assert lin.d == 1
    found = {o.U: o.witness for o in lin.outcomes}
    assert proportional(found[(0, 1)], P({(1, 0, 0): 1, (0, 1, 0): -1}))
    assert proportional(found[(0, 2)], P({(1, 0, 0): 1, (0, 0, 1): -1}))
    assert proportional(found[(1, 2)], P({(0, 1, 0): 1, (0, 0, 1): -1}))
    unit = certify_elimination_property(fixtures.load_ideal("unitw"))
    assert unit.d == NEG_INF and not unit.outcomes and "vacuous" in unit.format()


def test_report_table():
    text = certify_elimination_property(fixtures.load_ideal("dd")).format()
    lines = text.splitlines()
    assert lines[0] == "GK.dim(A/L) = 2, n = 4"
    assert lines[-1] == "summary: 4 subsets (all), 4 witnesses, 0 independent, 0 inconclusive"


@pytest.mark.parametrize("name", ["weyl1", "qplane", "sl2type", "commutative3", "ex4", "heis"])
def test_witnesses_are_valid(name):
    pres = fixtures.load_algebra(name).presentation
    for I in random_ideals(pres, 8, seed=21):
        rep = certify_elimination_property(I)
        assert rep.d < pres.n
        for o in rep.outcomes:
            assert o.status == "witness"
            assert o.witness and o.witness.supported_in(o.U)
            assert is_member(I, o.witness, rep.dimension.order)


@pytest.mark.parametrize("name", ["weyl1", "qplane", "sl2type", "commutative3", "heis"])
def test_methods_agree(name):
    pres = fixtures.load_algebra(name).presentation
    for I in random_ideals(pres, 6, seed=5, max_degree=2):
        order = graded(pres.weights)
        d = certify_elimination_property(I).d
        if d == NEG_INF:
            continue
        for U in examined_subsets(pres.n, d + 1)[0]:
            elim = find_elimination_order(pres, U)
            if elim is None:
                continue
            basis = I.groebner(elim)
            for method in ("normal-form", "products"):
                res = truncated_intersection(I, U, 4, order=order, method=method)
                if res.witness is not None:
                    # a truncated witness must lie in the ideal under the elimination order too
                    assert basis.contains(res.witness)
                    assert eliminate(I, U, elim)


def test_independent_set_is_weakly_independent():
    for name in ["weyl2", "commutative3", "sl2type"]:
        for iname in fixtures.ideal_names(name):
            I = fixtures.load_ideal(iname)
            rep = certify_elimination_property(I)
            U = rep.dimension.max_independent_set
            if U and find_elimination_order(I.algebra, U) is not None:
                assert eliminate(I, U) == []

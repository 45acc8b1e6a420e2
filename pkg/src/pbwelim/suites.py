"""Seeded random inputs for the property suites and ``pbwelim suite``."""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

from .dimension import NEG_INF, StaircaseIdeal
from .elimination import DEFAULT_CEILING, certify_elimination_property
from .errors import ResourceCapError
from .groebner import LeftIdeal
from .polynomial import Polynomial, weighted_degree


def monomials_upto(n: int, weights, D: int) -> list:
    out = []
    for e in itertools.product(range(D + 1), repeat=n):
        if weighted_degree(e, weights) <= D:
            out.append(e)
    return out


def random_polynomial(pres, rng: random.Random, max_degree: int = 3, max_terms: int = 3,
                      max_coeff: int = 3) -> Polynomial:
    mons = monomials_upto(pres.n, pres.weights, max_degree)
    while True:
        terms = {}
        for m in rng.sample(mons, min(len(mons), rng.randint(1, max_terms))):
            terms[m] = pres.field(rng.choice([-1, 1]) * rng.randint(1, max_coeff))
        p = Polynomial(terms, pres.n)
        if p:
            return p


def random_ideal(pres, rng: random.Random, max_gens: int = 3, **kw) -> LeftIdeal:
    k = rng.randint(1, max_gens)
    return LeftIdeal(pres, [random_polynomial(pres, rng, **kw) for _ in range(k)], "random")


def random_ideals(pres, count: int, seed: int = 0, **kw) -> list:
    rng = random.Random(seed)
    return [random_ideal(pres, rng, **kw) for _ in range(count)]


def random_staircase(rng: random.Random, max_n: int = 5, max_gens: int = 6, max_exp: int = 4) -> StaircaseIdeal:
    n = rng.randint(1, max_n)
    gens = [tuple(rng.randint(0, max_exp) for _ in range(n)) for _ in range(rng.randint(0, max_gens))]
    return StaircaseIdeal(n, gens)


def random_staircases(count: int, seed: int = 0, **kw) -> list:
    rng = random.Random(seed)
    return [random_staircase(rng, **kw) for _ in range(count)]


@dataclass
class SuiteRow:
    algebra: str
    n: int
    ideals: int = 0
    max_d: object = NEG_INF
    star_failures: int = 0
    subsets: int = 0
    witnesses: int = 0
    inconclusive: int = 0
    independent: int = 0
    cap_errors: int = 0

    @property
    def ok(self) -> bool:
        return (self.star_failures == 0 and self.inconclusive == 0 and self.independent == 0
                and self.cap_errors == 0 and self.witnesses == self.subsets)

    def line(self) -> str:
        d = "-inf" if self.max_d == NEG_INF else str(self.max_d)
        return (f"{self.algebra}: n={self.n} ideals={self.ideals} max_d={d} "
                f"d>=n:{self.star_failures} subsets={self.subsets} witnesses={self.witnesses} "
                f"independent={self.independent} inconclusive={self.inconclusive} "
                f"cap-errors={self.cap_errors} -> {'pass' if self.ok else 'FAIL'}")


def certification_suite(af, count: int = 100, seed: int = 0, extra=(), jobs: int = 1,
                        caps=None, ceiling: int = DEFAULT_CEILING) -> SuiteRow:
    """Certify the elimination property on ``extra`` ideals plus ``count`` random ones."""
    pres = af.presentation
    row = SuiteRow(pres.name, pres.n)
    ideals = list(extra) + random_ideals(pres, count, seed)
    for ideal in ideals:
        row.ideals += 1
        try:
            rep = certify_elimination_property(ideal, caps=caps, jobs=jobs, ceiling=ceiling)
        except ResourceCapError:
            row.cap_errors += 1
            continue
        d = rep.d
        row.max_d = max(row.max_d, d)
        if d != NEG_INF and d >= pres.n:
            row.star_failures += 1
        row.subsets += len(rep.outcomes)
        row.witnesses += rep.witnesses
        row.inconclusive += rep.inconclusive
        row.independent += rep.independent
    return row

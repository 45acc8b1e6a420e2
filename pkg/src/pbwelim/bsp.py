"""Binomial skew polynomial rings.

Relations ``X_j X_i = c_ij X_i' X_j'`` for every ``j > i``, where the pair
map (j, i) -> (i', j') must send descending pairs onto ascending pairs
bijectively with ``i' < j`` and ``i' < j'``, and every overlap must resolve.
The pair map also defines a map r on ordered pairs, checked against the
braid relation as an independent cross-check.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field

from .algebra import AlgebraPresentation, CheckResult, pbw_check
from .errors import InputError, ResourceCapError
from .field import QQ
from .polynomial import mono_add, generator


@dataclass
class BSPPresentation:
    """Pair map ``(j, i) -> (i', j')`` and coefficients ``c[(i, j)]``, 0-based, j > i."""

    n: int
    coeffs: dict
    pairs: dict
    field: object = QQ
    name: str | None = None
    form_violations: list = dc_field(default_factory=list)

    def __post_init__(self):
        if self.n < 1:
            raise InputError("a presentation needs at least one generator")
        for j in range(self.n):
            for i in range(j):
                if (j, i) not in self.pairs and (j, i) not in dict(self.form_violations):
                    raise InputError(f"pair map misses ({j + 1},{i + 1})")
                self.coeffs.setdefault((i, j), self.field.one)

    @classmethod
    def commuting(cls, n: int) -> "BSPPresentation":
        return cls(n, {}, {(j, i): (i, j) for j in range(n) for i in range(j)})

    @classmethod
    def from_algebra(cls, pres: AlgebraPresentation) -> "BSPPresentation":
        n = pres.n
        coeffs, pairs, bad = {}, {}, []
        for (j, i), rhs in sorted(pres.rhs.items()):
            if len(rhs) == 1:
                (m, c), = rhs.items()
                if sum(m) == 2:
                    idx = [k for k in range(n) for _ in range(m[k])]
                    pairs[(j, i)] = (idx[0], idx[1])
                    coeffs[(i, j)] = c
                    continue
            bad.append(((j, i), f"relation ({j + 1},{i + 1}) is not of the form c*X_i'X_j'"))
        return cls(n, coeffs, pairs, pres.field, pres.name, bad)

    def to_algebra(self) -> AlgebraPresentation:
        if self.form_violations:
            raise InputError("presentation has non-binomial relations")
        rels = {}
        for (j, i), (a, b) in self.pairs.items():
            rels[(j, i)] = {mono_add(generator(self.n, a), generator(self.n, b)): self.coeffs[(i, j)]}
        names = [f"X{k + 1}" for k in range(self.n)]
        return AlgebraPresentation(names, rels, field=self.field, name=self.name)

    def relation_lines(self) -> list:
        out = []
        for (j, i) in sorted(self.pairs):
            a, b = self.pairs[(j, i)]
            c = self.coeffs[(i, j)]
            coef = "" if c == 1 else f"{c}*"
            out.append(f"X{j + 1}*X{i + 1} = {coef}X{a + 1}*X{b + 1}")
        return out


def _word(a, b) -> str:
    return f"X_{a + 1}X_{b + 1}"


def bsp_check(p: BSPPresentation) -> CheckResult:
    """Conditions (a) nonzero coefficients, (b) i' < j and i' < j', (c) bijective
    onto the ascending pairs, (d) all overlaps resolve."""
    res = CheckResult("bsp", True)
    for (j, i), why in p.form_violations:
        res.passed = False
        res.witnesses.append(("form", (j + 1, i + 1)))
        res.lines.append(f"(form) violated: {why}")

    bad_a = [(j, i) for (j, i) in sorted(p.pairs) if not p.coeffs[(i, j)]]
    if bad_a:
        res.passed = False
        for j, i in bad_a:
            res.witnesses.append(("a", (j + 1, i + 1)))
            res.lines.append(f"(a) violated at (j,i)=({j + 1},{i + 1}): c_{i + 1}{j + 1} = 0")
    else:
        res.lines.append("(a) ok")

    bad_b = []
    for (j, i) in sorted(p.pairs):
        a, b = p.pairs[(j, i)]
        if not a < j:
            bad_b.append(f"(b) violated at (j,i)=({j + 1},{i + 1}): i'={a + 1} ≥ j={j + 1}")
        elif not a < b:
            bad_b.append(f"(b) violated at (j,i)=({j + 1},{i + 1}): i'={a + 1} ≥ j'={b + 1}")
        else:
            continue
        res.witnesses.append(("b", (j + 1, i + 1)))
    if bad_b:
        res.passed = False
        res.lines.extend(bad_b)
    else:
        res.lines.append("(b) ok")

    images = [p.pairs[k] for k in sorted(p.pairs)]
    counts: dict = {}
    for im in images:
        counts[im] = counts.get(im, 0) + 1
    ascending = [(i, j) for i in range(p.n) for j in range(i + 1, p.n)]
    parts = [f"{_word(*im)} repeated" for im in sorted(counts) if counts[im] > 1]
    parts += [f"{_word(*im)} not ascending" for im in sorted(counts) if not im[0] < im[1]]
    parts += [f"{_word(*im)} missing" for im in ascending if im not in counts]
    if parts and not p.form_violations:
        res.passed = False
        res.witnesses.append(("c", parts))
        res.lines.append("(c) violated: " + ", ".join(parts))
    elif not p.form_violations:
        res.lines.append("(c) ok")

    if bad_b or p.form_violations:
        res.lines.append("(d) not checked: needs (b) and binomial form for termination")
    else:
        try:
            pbw = pbw_check(p.to_algebra())
        except ResourceCapError as exc:
            res.passed = False
            res.lines.append(f"(d) not decided: {exc}")
        else:
            if pbw.passed:
                res.lines.append("(d) ok: " + pbw.lines[-1])
            else:
                res.passed = False
                res.witnesses.append(("d", pbw.witnesses[0][0]))
                res.lines.append("(d) violated: " + pbw.lines[-1])
    if res.passed:
        res.lines.append("conclusion: binomial skew polynomial ring; PBW basis, quadratic relations "
                         "and a domain, so GK.dim A = n and the elimination property holds")
    return res


def _r_map(p: BSPPresentation):
    r = {}
    for (j, i), (a, b) in p.pairs.items():
        c = p.coeffs[(i, j)]
        r[(j, i)] = ((a, b), c)
        r[(a, b)] = ((j, i), 1 / c)
    for k in range(p.n):
        r[(k, k)] = ((k, k), p.field.one)
    return r


def braid_check(p: BSPPresentation) -> CheckResult:
    """(r x id)(id x r)(r x id) == (id x r)(r x id)(id x r) on all n^3 triples."""
    res = CheckResult("braid", True)
    if p.form_violations or any(not c for c in p.coeffs.values()):
        res.passed = False
        res.lines.append("braid check needs nonzero binomial relations")
        return res
    r = _r_map(p)
    if len(r) != p.n * p.n:
        res.passed = False
        res.lines.append("pair map does not extend to all ordered pairs (condition (c) fails)")
        return res

    def r12(t, c):
        (x, y), k = r[(t[0], t[1])]
        return (x, y, t[2]), c * k

    def r23(t, c):
        (x, y), k = r[(t[1], t[2])]
        return (t[0], x, y), c * k

    one = p.field.one
    for t in itertools.product(range(p.n), repeat=3):
        left = r12(*r23(*r12(t, one)))
        right = r23(*r12(*r23(t, one)))
        if left != right:
            res.passed = False
            res.witnesses.append(tuple(x + 1 for x in t))
            res.lines.append(f"braid relation fails at triple {tuple(x + 1 for x in t)}")
            return res
    res.lines.append(f"braid relation holds on all {p.n ** 3} triples")
    return res


def _canonical(p: BSPPresentation):
    eqs = [((j, i), p.pairs[(j, i)]) for (j, i) in p.pairs]
    best = None
    for sigma in itertools.permutations(range(p.n)):
        key = tuple(sorted(tuple(sorted(((sigma[a], sigma[b]), (sigma[c], sigma[d]))))
                           for (a, b), (c, d) in eqs))
        if best is None or key < best:
            best = key
    return best


def bsp_search(n: int) -> list:
    """All pair maps with unit coefficients passing :func:`bsp_check`, one per
    relabeling class, in canonical order."""
    if not 1 <= n <= 4:
        raise InputError("bsp search supports 1 <= n <= 4")
    desc = [(j, i) for j in range(n) for i in range(j)]
    asc = [(i, j) for i in range(n) for j in range(i + 1, n)]
    seen = {}
    for images in itertools.permutations(asc):
        if any(not a < j for (j, _), (a, _b) in zip(desc, images)):
            continue
        p = BSPPresentation(n, {}, dict(zip(desc, images)), name=f"bsp{n}")
        if not bsp_check(p).passed:
            continue
        key = _canonical(p)
        if key not in seen:
            seen[key] = p
    return [seen[k] for k in sorted(seen)]


def census_text(found: list) -> str:
    lines = [f"{len(found)} presentations up to relabeling"]
    for k, p in enumerate(found, 1):
        lines.append(f"[{k}] " + "; ".join(p.relation_lines()))
    return "\n".join(lines) + "\n"


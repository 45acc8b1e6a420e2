"""Text formats for algebras, ideals, polynomials and order specs.

Algebra files are line based (``#`` starts a comment)::

    algebra weyl1
    field QQ
    gens x d
    weights 1 1
    rel d*x = x*d + 1
    order mine lex:d>x
    bsp

Ideal files::

    ideal dx
    algebra weyl1
    gen d

Monomials must list generators in ascending position (``x*d``, never
``d*x``); the parser refuses rather than reorders, since reordering changes
meaning in a noncommutative algebra.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction

from .algebra import AlgebraPresentation
from .errors import InputError
from .field import GF, QQ, format_scalar
from .order import MatrixOrder, elimination, graded, lex
from .polynomial import Polynomial, add_scaled

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(.))")
_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_]*$")


@dataclass
class AlgebraFile:
    presentation: AlgebraPresentation
    bsp: bool = False
    orders: dict = field(default_factory=dict)
    explicit: set = field(default_factory=set)

    @property
    def name(self):
        return self.presentation.name


@dataclass
class IdealFile:
    name: str
    algebra: str
    generators: list  # polynomial source strings
    line_numbers: list = field(default_factory=list)

    def build(self, pres: AlgebraPresentation):
        from .groebner import LeftIdeal

        polys = []
        for src, ln in zip(self.generators, self.line_numbers or [None] * len(self.generators)):
            p = parse_poly(src, pres, line=ln)
            if not p:
                raise InputError("ideal generator is zero", ln)
            polys.append(p)
        return LeftIdeal(pres, polys, self.name)


def _tokens(text: str, line=None):
    out = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        num, name, sym = m.groups()
        if num is not None:
            out.append(("num", int(num)))
        elif name is not None:
            out.append(("name", name))
        elif sym.strip():
            if sym not in "+-*/^":
                raise InputError(f"unexpected character {sym!r}", line)
            out.append((sym, sym))
        pos = m.end()
    return out


def _parse_terms(text: str, names, line=None):
    """Yield ``(coefficient, exponent tuple)`` pairs from a polynomial string."""
    index = {g: k for k, g in enumerate(names)}
    n = len(names)
    toks = _tokens(text, line)
    if not toks:
        raise InputError("empty polynomial", line)
    pos = 0

    def peek():
        return toks[pos][0] if pos < len(toks) else None

    def take(kind):
        nonlocal pos
        if peek() != kind:
            got = toks[pos][1] if pos < len(toks) else "end of line"
            raise InputError(f"expected {kind} but found {got!r}", line)
        pos += 1
        return toks[pos - 1][1]

    terms = []
    first = True
    while pos < len(toks):
        sign = 1
        if peek() in ("+", "-"):
            sign = -1 if take(peek()) == "-" else 1
        elif not first:
            raise InputError(f"expected '+' or '-' but found {toks[pos][1]!r}", line)
        first = False
        coef = None
        if peek() == "num":
            coef = Fraction(take("num"))
            if peek() == "/":
                take("/")
                den = take("num")
                if den == 0:
                    raise InputError("zero denominator", line)
                coef /= den
            if coef == 0:
                raise InputError("zero coefficient literal", line)
            if peek() == "*":
                take("*")
            else:
                terms.append((sign * coef, (0,) * n))
                continue
        exps = [0] * n
        last = -1
        while True:
            g = take("name")
            if g not in index:
                raise InputError(f"unknown generator {g!r}", line)
            k = index[g]
            if k <= last:
                raise InputError(f"monomial factors must follow generator order (PBW form): "
                                 f"{g} after {names[last]}", line)
            last = k
            e = 1
            if peek() == "^":
                take("^")
                e = take("num")
                if e == 0:
                    raise InputError("zero exponent", line)
            exps[k] = e
            if peek() == "*":
                take("*")
                continue
            break
        terms.append((sign * (coef if coef is not None else 1), tuple(exps)))
    return terms


def parse_poly(text: str, pres: AlgebraPresentation, line=None) -> Polynomial:
    acc: dict = {}
    for c, m in _parse_terms(text, pres.names, line):
        try:
            c = pres.field(c)
        except ZeroDivisionError as exc:
            raise InputError(str(exc), line) from None
        add_scaled(acc, {m: c}, 1)
    return Polynomial._wrap(acc, pres.n)


def _field_of(parts, line):
    if parts == ["QQ"]:
        return QQ
    if len(parts) == 2 and parts[0] == "GF" and parts[1].isdigit():
        try:
            return GF(int(parts[1]))
        except InputError as exc:
            raise InputError(str(exc), line) from None
    raise InputError(f"unknown field {' '.join(parts)!r}", line)


def parse_algebra(text: str) -> AlgebraFile:
    name = None
    fld = QQ
    gens = None
    weights = None
    rels = []  # (line, lhs, rhs)
    orders = {}
    bsp = False
    for ln, raw in enumerate(text.splitlines(), 1):
        s = raw.split("#", 1)[0].strip()
        if not s:
            continue
        head, _, rest = s.partition(" ")
        rest = rest.strip()
        parts = rest.split()
        if head == "algebra":
            if len(parts) != 1 or not _NAME.match(parts[0]):
                raise InputError("expected 'algebra <name>'", ln)
            name = parts[0]
        elif head == "field":
            fld = _field_of(parts, ln)
        elif head == "gens":
            if not parts or any(not _NAME.match(g) for g in parts):
                raise InputError("expected 'gens <g1> ... <gn>' with identifier names", ln)
            if len(set(parts)) != len(parts):
                raise InputError("generator names must be distinct", ln)
            gens = parts
        elif head == "weights":
            if not parts or any(not p.isdigit() or int(p) < 1 for p in parts):
                raise InputError("weights must be positive integers", ln)
            weights = [int(p) for p in parts]
        elif head == "rel":
            lhs, eq, rhs = rest.partition("=")
            if not eq:
                raise InputError("expected 'rel <gj>*<gi> = <poly>'", ln)
            rels.append((ln, lhs.strip(), rhs.strip()))
        elif head == "order":
            if len(parts) != 2:
                raise InputError("expected 'order <name> <spec>'", ln)
            orders[parts[0]] = (parts[1], ln)
        elif s == "bsp":
            bsp = True
        else:
            raise InputError(f"malformed line: {s!r}", ln)
    if name is None:
        raise InputError("missing 'algebra <name>' line")
    if gens is None:
        raise InputError("missing 'gens' line")
    if weights is not None and len(weights) != len(gens):
        raise InputError(f"{len(weights)} weights for {len(gens)} generators")
    index = {g: k for k, g in enumerate(gens)}
    relations = {}
    for ln, lhs, rhs in rels:
        factors = [f.strip() for f in lhs.split("*")]
        if len(factors) != 2 or any(f not in index for f in factors):
            bad = [f for f in factors if f not in index]
            if bad:
                raise InputError(f"unknown generator {bad[0]!r}", ln)
            raise InputError("relation left side must be a product of two generators", ln)
        j, i = index[factors[0]], index[factors[1]]
        if not j > i:
            raise InputError("relation left side must be descending", ln)
        if (j, i) in relations:
            raise InputError(f"duplicate relation for {factors[0]}*{factors[1]}", ln)
        acc: dict = {}
        for c, m in _parse_terms(rhs, gens, ln):
            try:
                c = fld(c)
            except ZeroDivisionError as exc:
                raise InputError(str(exc), ln) from None
            add_scaled(acc, {m: c}, 1)
        relations[(j, i)] = acc
    pres = AlgebraPresentation(gens, relations, field=fld, weights=weights, name=name)
    af = AlgebraFile(pres, bsp, {}, set(relations))
    for oname, (spec, ln) in orders.items():
        try:
            parse_order(spec, pres)
        except InputError as exc:
            raise InputError(str(exc), ln) from None
        af.orders[oname] = spec
    return af


def parse_ideal(text: str) -> IdealFile:
    name = alg = None
    gens, lines = [], []
    for ln, raw in enumerate(text.splitlines(), 1):
        s = raw.split("#", 1)[0].strip()
        if not s:
            continue
        head, _, rest = s.partition(" ")
        rest = rest.strip()
        if head == "ideal" and _NAME.match(rest):
            name = rest
        elif head == "algebra" and _NAME.match(rest):
            alg = rest
        elif head == "gen" and rest:
            gens.append(rest)
            lines.append(ln)
        else:
            raise InputError(f"malformed line: {s!r}", ln)
    if name is None or alg is None:
        raise InputError("ideal file needs 'ideal <name>' and 'algebra <name>' lines")
    if not gens:
        raise InputError("ideal file has no 'gen' lines")
    return IdealFile(name, alg, gens, lines)


# --- printing -----------------------------------------------------------------------


def format_monomial(m, names) -> str:
    parts = []
    for g, e in zip(names, m):
        if e == 1:
            parts.append(g)
        elif e > 1:
            parts.append(f"{g}^{e}")
    return "*".join(parts)


def format_poly(p: Polynomial, names, order: MatrixOrder | None = None) -> str:
    """Terms in descending order under ``order`` (graded by default)."""
    if not p:
        return "0"
    order = order or graded([1] * p.n)
    out = []
    for m, c in p.sorted_terms(order):
        neg = isinstance(c, Fraction) and c < 0
        a = -c if neg else c
        mono = format_monomial(m, names)
        if not mono:
            body = format_scalar(a)
        elif a == 1:
            body = mono
        else:
            body = f"{format_scalar(a)}*{mono}"
        if not out:
            out.append(f"-{body}" if neg else body)
        else:
            out.append(f" - {body}" if neg else f" + {body}")
    return "".join(out)


def format_order(order: MatrixOrder) -> str:
    return order.matrix_spec()


def format_algebra(af: AlgebraFile) -> str:
    pres = af.presentation
    n = pres.n
    lines = [f"algebra {pres.name}"]
    lines.append("field QQ" if pres.field == QQ else f"field GF {pres.field.p}")
    lines.append("gens " + " ".join(pres.names))
    lines.append("weights " + " ".join(map(str, pres.weights)))
    order = graded(pres.weights)
    for j in range(n):
        for i in range(j):
            rhs = pres.relation_poly(j, i)
            lam, tail = pres.relation(j, i)
            if (j, i) in af.explicit or lam != 1 or tail:
                lines.append(f"rel {pres.names[j]}*{pres.names[i]} = {format_poly(rhs, pres.names, order)}")
    for oname in sorted(af.orders):
        lines.append(f"order {oname} {af.orders[oname]}")
    if af.bsp:
        lines.append("bsp")
    return "\n".join(lines) + "\n"


def format_ideal(name: str, alg: str, gens, names, order=None) -> str:
    lines = [f"ideal {name}", f"algebra {alg}"]
    lines += [f"gen {format_poly(g, names, order)}" for g in gens]
    return "\n".join(lines) + "\n"


# --- order specs --------------------------------------------------------------------


def _perm(body: str, pres: AlgebraPresentation):
    names = [t.strip() for t in body.split(">")]
    if sorted(names) != sorted(pres.names):
        raise InputError(f"order permutation {body!r} must list every generator exactly once")
    return [pres.index(g) for g in names]


def parse_order(spec: str, pres: AlgebraPresentation, named: dict | None = None) -> MatrixOrder:
    """Order spec: ``lex[:a>b>..]``, ``grlex[:..]``, ``wgrlex[:..]``,
    ``elim:<g,...>``, ``matrix:<r1>;<r2>..`` or a name defined in the file."""
    if named and spec in named:
        return parse_order(named[spec], pres)
    kind, _, body = spec.partition(":")
    n = pres.n
    if kind == "lex":
        order = lex(n, _perm(body, pres) if body else None)
    elif kind == "grlex":
        order = graded([1] * n, _perm(body, pres) if body else None)
    elif kind == "wgrlex":
        order = graded(pres.weights, _perm(body, pres) if body else None)
    elif kind == "elim":
        keep = [t.strip() for t in body.split(",") if t.strip()]
        if not keep:
            raise InputError("elim order needs a keep-list")
        order = elimination(n, [pres.index(g) for g in keep], pres.weights)
    elif kind == "matrix":
        try:
            rows = [[int(x) for x in r.split(",")] for r in body.split(";") if r.strip()]
        except ValueError:
            raise InputError(f"malformed matrix order {spec!r}") from None
        order = MatrixOrder(rows, label="matrix")
        if order.n != n:
            raise InputError(f"matrix order has {order.n} columns, algebra has {n} generators")
    else:
        raise InputError(f"unknown order spec {spec!r}")
    order.label = spec
    return order


__all__ = [
    "AlgebraFile", "IdealFile", "parse_algebra", "parse_ideal", "parse_poly", "parse_order",
    "format_poly", "format_algebra", "format_ideal", "format_monomial", "format_order",
]

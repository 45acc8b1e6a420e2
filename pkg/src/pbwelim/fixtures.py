"""Built-in algebras and ideals, stored in the text formats of :mod:`pbwelim.syntax`."""
from __future__ import annotations

from fractions import Fraction

from .errors import InputError
from .syntax import AlgebraFile, IdealFile, parse_algebra, parse_ideal


def ex4_text(lam=1, mu=1, f_degree: int = 6) -> str:
    """Three generators with weights (2, 1, 4) and a degree-3 tail in x3*x1.

    ``x3*x1 = lam*x1*x3 + mu*x2^2*x3 + x2^f_degree``; f_degree <= 6 keeps the
    tail at weighted degree <= 6 = d(x1*x3).
    """
    lam, mu = Fraction(lam), Fraction(mu)
    if lam == 0:
        raise InputError("lambda must be nonzero")
    if not 0 <= f_degree <= 6:
        raise InputError("f-degree must lie in 0..6")

    def c(v):
        return str(v) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"

    def coef(v):
        return "" if v == 1 else f"{c(v)}*"

    terms = [f"{c(lam)}*x1*x3" if lam != 1 else "x1*x3"]
    if mu:
        terms.append(f"{coef(abs(mu))}x2^2*x3" if mu > 0 else f"- {coef(-mu)}x2^2*x3")
    terms.append("x2" if f_degree == 1 else "1" if f_degree == 0 else f"x2^{f_degree}")
    rhs = terms[0]
    for t in terms[1:]:
        rhs += f" {t}" if t.startswith("-") else f" + {t}"
    return (
        "algebra ex4\n"
        "field QQ\n"
        "gens x1 x2 x3\n"
        "weights 2 1 4\n"
        "rel x2*x1 = x1*x2\n"
        f"rel x3*x1 = {rhs}\n"
        "rel x3*x2 = x2*x3\n"
        "# ties in weighted degree broken with x1 most significant\n"
        "order wgrlex wgrlex:x1>x2>x3\n"
    )


ALGEBRAS = {
    "weyl1": "algebra weyl1\nfield QQ\ngens x d\nrel d*x = x*d + 1\n",
    "weyl2": (
        "algebra weyl2\nfield QQ\ngens x1 x2 d1 d2\n"
        "rel d1*x1 = x1*d1 + 1\nrel d2*x2 = x2*d2 + 1\n"
    ),
    "qplane": "algebra qplane\nfield QQ\ngens x y\nrel y*x = 2*x*y\nbsp\n",
    "sl2type": (
        "algebra sl2type\nfield QQ\ngens e f h\n"
        "rel f*e = e*f - h\nrel h*e = e*h + 2*e\nrel h*f = f*h - 2*f\n"
    ),
    "commutative3": "algebra commutative3\nfield QQ\ngens x y z\nbsp\n",
    "ex4": ex4_text(),
    "heis": "algebra heis\nfield QQ\ngens a1 a2 a3\nrel a2*a1 = a1*a2 - a3\n",
    "jacobifail": (
        "algebra jacobifail\nfield QQ\ngens a1 a2 a3\n"
        "rel a2*a1 = a1*a2 - a3\nrel a3*a1 = a1*a3\nrel a3*a2 = a2*a3 + a2\n"
    ),
}

IDEALS = {
    "dx": "ideal dx\nalgebra weyl1\ngen d\n",
    "unitw": "ideal unitw\nalgebra weyl1\ngen x\ngen d\n",
    "dd": "ideal dd\nalgebra weyl2\ngen d1\ngen d2\n",
    "mixed": "ideal mixed\nalgebra weyl2\ngen d1 - x2\ngen d2\n",
    "qline": "ideal qline\nalgebra qplane\ngen x + y\n",
    "qxy": "ideal qxy\nalgebra qplane\ngen x*y - 1\n",
    "sl2e": "ideal sl2e\nalgebra sl2type\ngen e\n",
    "sl2hw": "ideal sl2hw\nalgebra sl2type\ngen e\ngen h - 2\n",
    "linear2": "ideal linear2\nalgebra commutative3\ngen x - y\ngen y - z\n",
    "xzyz": "ideal xzyz\nalgebra commutative3\ngen x*z\ngen y*z\n",
    "ex4a": "ideal ex4a\nalgebra ex4\ngen x3 - x1^2\n",
    "ex4b": "ideal ex4b\nalgebra ex4\ngen x1*x2 + x2^3\ngen x2^2 - 1\n",
    "heisa": "ideal heisa\nalgebra heis\ngen a1\ngen a2\n",
}

# algebras whose relations pass the solvable-type check under some graded order
SOLVABLE = ("weyl1", "weyl2", "qplane", "sl2type", "commutative3", "ex4", "heis")


def algebra_names() -> list:
    return sorted(ALGEBRAS)


def ideal_names(algebra: str | None = None) -> list:
    return sorted(k for k in IDEALS if algebra is None or load_ideal_file(k).algebra == algebra)


def load_algebra(name: str) -> AlgebraFile:
    """Parse a fresh copy of a built-in algebra (fresh memo caches)."""
    try:
        return parse_algebra(ALGEBRAS[name])
    except KeyError:
        raise InputError(f"unknown fixture algebra {name!r}") from None


def load_ideal_file(name: str) -> IdealFile:
    try:
        return parse_ideal(IDEALS[name])
    except KeyError:
        raise InputError(f"unknown fixture ideal {name!r}") from None


def load_ideal(name: str, af: AlgebraFile | None = None):
    f = load_ideal_file(name)
    af = af or load_algebra(f.algebra)
    if af.name != f.algebra:
        raise InputError(f"ideal {name!r} belongs to algebra {f.algebra!r}, not {af.name!r}")
    return f.build(af.presentation)


def emit(name: str) -> str:
    if name in ALGEBRAS:
        return ALGEBRAS[name]
    if name in IDEALS:
        return IDEALS[name]
    raise InputError(f"unknown fixture {name!r}")

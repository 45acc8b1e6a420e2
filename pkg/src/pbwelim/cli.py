"""Command line interface.

Exit codes: 0 success or pass, 1 check failed, 2 input error, 3 resource cap.
Algebra and ideal arguments name a file if one exists at that path,
otherwise a built-in fixture.
"""
from __future__ import annotations

import argparse
import logging
import os
import sys

from . import fixtures
from .algebra import (NotSolvableError, default_graded_order, filtration_compat_check, pbw_check,
                      solvable_check, structure_report)
from .bsp import BSPPresentation, braid_check, bsp_check, bsp_search, census_text
from .dimension import gk_dim_quotient
from .elimination import DEFAULT_CEILING, certify_elimination_property, eliminate, find_elimination_order
from .errors import InputError, ResourceCapError
from .groebner import DEFAULT_MAX_BASIS, DEFAULT_MAX_DEGREE, Caps, graded_groebner
from .syntax import format_poly, parse_algebra, parse_ideal, parse_order, parse_poly

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_CAP = 0, 1, 2, 3


def _read(path: str) -> str:
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def load_algebra(arg: str, step_cap: int | None = None):
    af = parse_algebra(_read(arg)) if os.path.isfile(arg) else fixtures.load_algebra(arg)
    if step_cap is not None:
        af.presentation.step_cap = step_cap
    return af


def load_ideal(arg: str, af):
    f = parse_ideal(_read(arg)) if os.path.isfile(arg) else fixtures.load_ideal_file(arg)
    if f.algebra != af.name:
        raise InputError(f"ideal {f.name!r} is declared over {f.algebra!r}, not {af.name!r}")
    return f.build(af.presentation)


def _order(args, af, required=False):
    spec = getattr(args, "order", None)
    if spec is None:
        if required:
            raise InputError("--order is required")
        return None
    return parse_order(spec, af.presentation, af.orders)


def _basis(ideal, af, args):
    order = _order(args, af)
    if order is None:
        return graded_groebner(ideal, _caps(args))
    return ideal.groebner(order, _caps(args))


def _caps(args) -> Caps:
    return Caps(args.cap_degree, args.cap_basis, args.cap_work)


def _print_check(res, out):
    out.append(f"{res.name}: {res.verdict}")
    out.extend(f"  {line}" for line in res.lines)
    return EXIT_OK if res.passed else EXIT_FAIL


def cmd_check(args, out):
    af = load_algebra(args.algebra, args.cap_steps)
    pres = af.presentation
    if args.what == "pbw":
        return _print_check(pbw_check(pres, args.cap_steps), out)
    if args.what == "solvable":
        order = _order(args, af)
        if order is None:
            order = default_graded_order(pres)
            if order is None:
                out.append("solvable: fail")
                out.append("  no weighted graded order makes every tail lower")
                return EXIT_FAIL
        out.append(f"order: {order.label} = {order.matrix_spec()}")
        return _print_check(solvable_check(pres, order), out)
    if args.what == "filtration":
        code = _print_check(filtration_compat_check(pres), out)
        if args.probe is not None:
            from .algebra import filtration_probe

            out.append(f"  dim F_{args.probe} = {filtration_probe(pres, args.probe)}")
        return code
    if args.what == "bsp":
        bp = BSPPresentation.from_algebra(pres)
        code = _print_check(bsp_check(bp), out)
        if code == EXIT_OK:
            _print_check(braid_check(bp), out)
        return code
    rep = structure_report(pres, _order(args, af))
    out.extend(rep.lines)
    return EXIT_OK if rep.pbw.passed else EXIT_FAIL


def cmd_gb(args, out):
    af = load_algebra(args.algebra, args.cap_steps)
    ideal = load_ideal(args.ideal, af)
    gb = _basis(ideal, af, args)
    for g in gb:
        out.append(format_poly(g, af.presentation.names, gb.order))
    return EXIT_OK


def cmd_member(args, out):
    af = load_algebra(args.algebra, args.cap_steps)
    ideal = load_ideal(args.ideal, af)
    f = parse_poly(args.poly, af.presentation)
    gb = _basis(ideal, af, args)
    r = gb.reduce(f)
    names = af.presentation.names
    out.append(f"normal form: {format_poly(r, names, gb.order)}")
    out.append("member: " + ("true" if not r else "false"))
    return EXIT_OK if not r else EXIT_FAIL


def cmd_gkdim(args, out):
    af = load_algebra(args.algebra, args.cap_steps)
    ideal = load_ideal(args.ideal, af)
    rep = gk_dim_quotient(ideal, _order(args, af), _caps(args))
    out.append(f"order: {rep.order.label} = {rep.order.matrix_spec()}")
    out.append(rep.format())
    if args.csv:
        out.append(rep.to_csv().rstrip("\n"))
    return EXIT_OK


def cmd_eliminate(args, out):
    af = load_algebra(args.algebra, args.cap_steps)
    pres = af.presentation
    ideal = load_ideal(args.ideal, af)
    keep = [pres.index(g.strip()) for g in args.keep.split(",") if g.strip()]
    order = _order(args, af) or find_elimination_order(pres, keep)
    if order is None:
        out.append("no elimination order available for this subset")
        return EXIT_FAIL
    found = eliminate(ideal, keep, order, _caps(args))
    out.append(f"order: {order.label} = {order.matrix_spec()}")
    if not found:
        out.append("V(U) ∩ L = 0 (no basis element supported in U)")
    for g in found:
        out.append(format_poly(g, pres.names, order))
    return EXIT_OK


def cmd_elimprop(args, out):
    af = load_algebra(args.algebra, args.cap_steps)
    ideal = load_ideal(args.ideal, af)
    rep = certify_elimination_property(ideal, _order(args, af), _caps(args), jobs=args.jobs,
                                       ceiling=args.ceiling)
    out.append(rep.format())
    return EXIT_OK if rep.all_witnessed else EXIT_FAIL


def cmd_bsp(args, out):
    if args.n is None:
        raise InputError("bsp search needs --n")
    out.append(census_text(bsp_search(args.n)).rstrip("\n"))
    return EXIT_OK


def cmd_fixtures(args, out):
    if args.action == "list":
        out.append("algebras: " + " ".join(fixtures.algebra_names()))
        for a in fixtures.algebra_names():
            ideals = fixtures.ideal_names(a)
            if ideals:
                out.append(f"ideals over {a}: " + " ".join(ideals))
        return EXIT_OK
    if not args.name:
        raise InputError("fixtures emit needs a name")
    if args.name == "ex4" and (args.lam is not None or args.mu is not None or args.f_degree is not None):
        text = fixtures.ex4_text(args.lam if args.lam is not None else 1,
                                 args.mu if args.mu is not None else 1,
                                 args.f_degree if args.f_degree is not None else 6)
    else:
        text = fixtures.emit(args.name)
    out.append(text.rstrip("\n"))
    return EXIT_OK


def cmd_suite(args, out):
    from .suites import certification_suite

    names = args.algebras or ["weyl1", "weyl2", "qplane", "sl2type", "commutative3", "ex4"]
    ok = True
    for name in names:
        af = load_algebra(name, args.cap_steps)
        extra = [fixtures.load_ideal(i, af) for i in fixtures.ideal_names(name)] if not os.path.isfile(name) else []
        row = certification_suite(af, args.count, args.seed, extra, jobs=args.jobs,
                                  caps=_caps(args), ceiling=args.ceiling)
        out.append(row.line())
        ok = ok and row.ok
    return EXIT_OK if ok else EXIT_FAIL


def _fraction(text):
    from fractions import Fraction

    try:
        return Fraction(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--cap-degree", type=int, default=DEFAULT_MAX_DEGREE)
    common.add_argument("--cap-basis", type=int, default=DEFAULT_MAX_BASIS)
    common.add_argument("--cap-steps", type=int, default=None)
    common.add_argument("--cap-work", type=int, default=None,
                        help="reduction effort limit for Groebner computations")
    common.add_argument("-v", "--verbose", action="store_true")

    p = argparse.ArgumentParser(prog="pbwelim", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("check", parents=[common], help="structural checks on an algebra")
    c.add_argument("what", choices=["pbw", "solvable", "filtration", "bsp", "all"])
    c.add_argument("algebra")
    c.add_argument("--order")
    c.add_argument("--probe", type=int, help="also report dim F_m A for this m")
    c.set_defaults(func=cmd_check)

    for name, func, helptext in (("gb", cmd_gb, "reduced left Groebner basis"),
                                 ("member", cmd_member, "ideal membership"),
                                 ("gkdim", cmd_gkdim, "GK dimension of A/L"),
                                 ("eliminate", cmd_eliminate, "basis elements supported in a subset"),
                                 ("elimprop", cmd_elimprop, "certify the elimination property")):
        s = sub.add_parser(name, parents=[common], help=helptext)
        s.add_argument("algebra")
        s.add_argument("ideal")
        s.add_argument("--order")
        s.set_defaults(func=func)
        if name == "member":
            s.add_argument("--poly", required=True)
        if name == "gkdim":
            s.add_argument("--csv", action="store_true", help="append the q,count table")
        if name == "eliminate":
            s.add_argument("--keep", required=True)
        if name == "elimprop":
            s.add_argument("--jobs", type=int, default=1)
            s.add_argument("--ceiling", type=int, default=DEFAULT_CEILING)

    b = sub.add_parser("bsp", parents=[common], help="binomial skew polynomial search")
    b.add_argument("action", choices=["search"])
    b.add_argument("--n", type=int)
    b.set_defaults(func=cmd_bsp)

    f = sub.add_parser("fixtures", parents=[common], help="built-in algebras and ideals")
    f.add_argument("action", choices=["list", "emit"])
    f.add_argument("name", nargs="?")
    f.add_argument("--lambda", dest="lam", type=_fraction)
    f.add_argument("--mu", type=_fraction)
    f.add_argument("--f-degree", type=int)
    f.set_defaults(func=cmd_fixtures)

    s = sub.add_parser("suite", parents=[common], help="randomized elimination certification")
    s.add_argument("algebras", nargs="*")
    s.add_argument("--count", type=int, default=100)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--jobs", type=int, default=1)
    s.add_argument("--ceiling", type=int, default=DEFAULT_CEILING)
    s.set_defaults(func=cmd_suite)
    return p


def run(argv=None) -> tuple[int, str]:
    """Run one command; returns ``(exit code, report text)``."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return (EXIT_INPUT if exc.code else EXIT_OK), ""
    if args.verbose:
        logging.basicConfig(level=logging.INFO, format="%(name)s: %(message)s")
    out: list = []
    try:
        code = args.func(args, out)
    except NotSolvableError as exc:
        out.append(f"not solvable: {exc}")
        code = EXIT_FAIL
    except ResourceCapError as exc:
        out.append(f"resource cap: {exc}")
        code = EXIT_CAP
    except (InputError, OSError) as exc:
        out.append(f"input error: {exc}")
        code = EXIT_INPUT
    return code, "\n".join(out) + ("\n" if out else "")


def main(argv=None) -> int:
    code, text = run(argv)
    stream = sys.stdout if code in (EXIT_OK, EXIT_FAIL) else sys.stderr
    stream.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())

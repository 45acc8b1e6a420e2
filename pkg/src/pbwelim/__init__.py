"""Exact PBW-algebra engine.

Quadratic presentations with PBW and solvable-type checks, left Groebner
bases, GK dimension of cyclic modules A/L, elimination certificates and
binomial skew polynomial rings.
"""
from .algebra import (AlgebraPresentation, CheckResult, NotSolvableError, ValidatedAlgebra,
                      default_graded_order, filtration_compat_check, filtration_probe, normal_form_word,
                      pbw_check, solvable_check, structure_report)
from .bsp import BSPPresentation, braid_check, bsp_check, bsp_search
from .dimension import (DimensionReport, StaircaseIdeal, combinatorial_dim, gk_dim_quotient, hilbert_degree,
                        ufnarovski_gk_dim)
from .elimination import (certify_elimination_property, eliminate, find_elimination_order,
                          truncated_intersection)
from .errors import (ConsistencyError, InputError, NonterminationError, PBWError, ResourceCapError,
                     StepCapExceeded)
from .field import GF, QQ
from .groebner import Caps, GroebnerBasis, LeftIdeal, buchberger, graded_groebner, is_member, left_normal_form
from .order import MatrixOrder, elimination, graded, lex
from .polynomial import Polynomial
from .syntax import format_poly, parse_algebra, parse_ideal, parse_order, parse_poly

__version__ = "0.1.0"

__all__ = [
    "AlgebraPresentation", "BSPPresentation", "Caps", "CheckResult", "ConsistencyError", "DimensionReport",
    "GF", "GroebnerBasis", "InputError", "LeftIdeal", "MatrixOrder", "NonterminationError",
    "NotSolvableError", "PBWError", "Polynomial", "QQ", "ResourceCapError", "StaircaseIdeal",
    "StepCapExceeded", "ValidatedAlgebra", "braid_check", "bsp_check", "bsp_search", "buchberger",
    "certify_elimination_property", "combinatorial_dim", "default_graded_order", "eliminate", "elimination",
    "filtration_compat_check", "filtration_probe", "find_elimination_order", "format_poly", "gk_dim_quotient",
    "graded", "graded_groebner", "hilbert_degree", "is_member", "left_normal_form", "lex",
    "normal_form_word", "parse_algebra", "parse_ideal", "parse_order", "parse_poly", "pbw_check",
    "solvable_check", "structure_report", "truncated_intersection", "ufnarovski_gk_dim",
]

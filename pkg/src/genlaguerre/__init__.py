"""Exact generalized Laguerre polynomials L_{floor(n/q)}^{(alpha,beta)}(z).

Five independent constructions (defining series, binomial closed form,
full-history recurrence, Hessenberg determinant, composition sum) over exact
rationals, plus a double-precision evaluator for real alpha.
"""
from .detform import (
    HessenbergMatrix,
    a_term,
    build_matrix,
    build_prefix_matrix,
    composition_expansion,
    compositions,
    hessenberg_det,
    laguerre_composition,
    laguerre_det,
)
from .exceptions import CompositionTooLargeError, ParameterError, UnsupportedParameterError
from .laguerre import (
    LaguerreResult,
    Method,
    Params,
    laguerre_classical,
    laguerre_closed,
    laguerre_series,
    series_coefficient,
)
from .methods import construct, construct_range
from .numeric import FloatEval, laguerre_eval_float, log_gamma
from .poly import Poly, poly_add, poly_eval, poly_mul, poly_scale
from .recurrence import CoeffTable, coeff_B, coeff_C, laguerre_recurrence, three_term
from .scalar import (
    Rational,
    falling_factorial,
    format_rational,
    gamma_ratio,
    gen_binomial,
    parse_rational,
    rising_factorial,
)
from .verify import VerifyReport, run_verify

__version__ = "0.1.0"

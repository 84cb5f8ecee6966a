"""Direct constructors for the generalized Laguerre polynomials.

``L_{floor(n/q)}^{(alpha, beta)}(z)`` is built either from its defining
hypergeometric-type series or from the closed form in binomial
coefficients.  Both are exact for integer ``alpha`` and rational ``beta``.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction

from .exceptions import ParameterError
from .poly import Poly
from .scalar import as_rational, format_rational, gamma_ratio, gen_binomial, rising_factorial

__all__ = [
    "Method",
    "Params",
    "LaguerreResult",
    "series_coefficient",
    "laguerre_series",
    "closed_coefficient",
    "laguerre_closed",
    "laguerre_classical",
]


class Method(str, enum.Enum):
    SERIES = "series"
    CLOSED = "closed"
    RECURRENCE = "recurrence"
    DETERMINANT = "determinant"
    COMPOSITION = "composition"

    def __str__(self) -> str:
        return self.value


# Constructors that exist only for q = 1.
Q1_ONLY = frozenset({Method.RECURRENCE, Method.DETERMINANT, Method.COMPOSITION})


@dataclass(frozen=True)
class Params:
    """Parameter triple (alpha, beta, q); the single validation gate.

    ``alpha`` and ``q`` are positive integers and ``beta`` a rational with
    ``beta > -1``.  ``beta`` may be given as int, Fraction or string.
    """

    alpha: int
    beta: Fraction
    q: int = 1

    def __post_init__(self):
        for name in ("alpha", "q"):
            v = getattr(self, name)
            if isinstance(v, bool) or not isinstance(v, int):
                raise ParameterError(f"{name} must be a positive integer, got {v!r}")
            if v < 1:
                raise ParameterError(f"{name} must be >= 1, got {v}")
        try:
            beta = as_rational(self.beta)
        except (TypeError, ValueError) as exc:
            raise ParameterError(f"beta must be an exact rational: {exc}") from exc
        if beta <= -1:
            raise ParameterError(f"beta must exceed -1, got {format_rational(beta)}")
        object.__setattr__(self, "beta", beta)

    def degree(self, n: int) -> int:
        """floor(n / q), the polynomial degree at index n."""
        return n // self.q

    def __str__(self) -> str:
        return f"alpha={self.alpha}, beta={format_rational(self.beta)}, q={self.q}"


@dataclass(frozen=True)
class LaguerreResult:
    params: Params
    n: int
    poly: Poly
    method: Method

    def to_dict(self) -> dict:
        return {
            "alpha": self.params.alpha,
            "beta": format_rational(self.params.beta),
            "q": self.params.q,
            "n": self.n,
            "method": self.method.value,
            "coeffs": self.poly.to_strings(),
        }


def _check_n(n: int) -> None:
    if isinstance(n, bool) or not isinstance(n, int) or n < 0:
        raise ParameterError(f"n must be a nonnegative integer, got {n!r}")


def series_coefficient(params: Params, n: int, k: int) -> Fraction:
    """Coefficient of z**k in the defining series.

    Gamma(alpha n+beta+1)/Gamma(alpha k+beta+1) becomes a finite product,
    and the rising factorial (-n)^(qk) is an integer.
    """
    _check_n(n)
    if not 0 <= k <= params.degree(n):
        raise ParameterError(f"k={k} outside [0, {params.degree(n)}] for n={n}, q={params.q}")
    num = gamma_ratio(params.beta, params.alpha, n, k) * rising_factorial(-n, params.q * k)
    return num / (math.factorial(n) * math.factorial(k))


def laguerre_series(params: Params, n: int) -> LaguerreResult:
    _check_n(n)
    coeffs = [series_coefficient(params, n, k) for k in range(params.degree(n) + 1)]
    return LaguerreResult(params, n, Poly(coeffs), Method.SERIES)


def closed_coefficient(params: Params, n: int, j: int) -> Fraction:
    """Coefficient of z**j in the binomial closed form.

    (-1)^j * binom(alpha n + beta, alpha (n-j)) * (alpha (n-j))! / (n - q j)! / j!

    Note the sign is (-1)^j for every q.  The series carries (-1)^(q j)
    instead, so the two constructions disagree in odd powers when q is even.
    """
    _check_n(n)
    a, q = params.alpha, params.q
    if not 0 <= j <= params.degree(n):
        raise ParameterError(f"j={j} outside [0, {params.degree(n)}] for n={n}, q={q}")
    top = a * n + params.beta
    c = gen_binomial(top, a * (n - j)) * Fraction(math.factorial(a * (n - j)), math.factorial(n - q * j))
    c /= math.factorial(j)
    return -c if j % 2 else c


def laguerre_closed(params: Params, n: int) -> LaguerreResult:
    _check_n(n)
    coeffs = [closed_coefficient(params, n, j) for j in range(params.degree(n) + 1)]
    return LaguerreResult(params, n, Poly(coeffs), Method.CLOSED)


def laguerre_classical(beta, n: int) -> LaguerreResult:
    """Classical L_n^(beta): sum_j (-1)^j binom(n+beta, n-j) z^j / j!."""
    params = Params(1, beta, 1)
    _check_n(n)
    b = params.beta
    coeffs = []
    for j in range(n + 1):
        c = gen_binomial(n + b, n - j) / math.factorial(j)
        coeffs.append(-c if j % 2 else c)
    return LaguerreResult(params, n, Poly(coeffs), Method.CLOSED)

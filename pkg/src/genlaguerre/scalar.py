"""Exact rational scalars and factorial-type products.

Rationals are :class:`fractions.Fraction` values, which already keep
themselves in lowest terms with a positive denominator.  This module adds
the parsing/formatting used at the CLI boundary and the finite products
that replace every Gamma function on the exact path.
"""
from __future__ import annotations

import math
from fractions import Fraction
from numbers import Rational as _RationalABC

Rational = Fraction

__all__ = [
    "Rational",
    "as_rational",
    "parse_rational",
    "format_rational",
    "rising_factorial",
    "falling_factorial",
    "gamma_ratio",
    "gen_binomial",
]


def as_rational(x) -> Fraction:
    """Coerce ``x`` to a Fraction without ever going through a float.

    Accepts ints, Fractions (or any :class:`numbers.Rational`) and strings in
    the forms understood by :func:`parse_rational`.
    """
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("bool is not a rational value")
    if isinstance(x, _RationalABC):
        return Fraction(x.numerator, x.denominator)
    if isinstance(x, str):
        return parse_rational(x)
    raise TypeError(f"cannot use {type(x).__name__} as an exact rational; pass int, Fraction or str")


def parse_rational(text: str) -> Fraction:
    """Parse ``"p/q"``, a plain integer, or a finite decimal exactly.

    >>> parse_rational("0.5")
    Fraction(1, 2)
    >>> parse_rational("-6/4")
    Fraction(-3, 2)
    """
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not an exact rational: {text!r}") from exc


def format_rational(x: Fraction) -> str:
    """Serialize as ``"num/den"``, dropping the denominator when it is 1."""
    x = as_rational(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def _check_order(k: int) -> None:
    if k < 0:
        raise ValueError(f"factorial order must be nonnegative, got {k}")


def rising_factorial(x, k: int) -> Fraction:
    """x (x+1) ... (x+k-1); the empty product 1 when k = 0."""
    _check_order(k)
    x = as_rational(x)
    out = Fraction(1)
    for i in range(k):
        out *= x + i
    return out


def falling_factorial(x, k: int) -> Fraction:
    """x (x-1) ... (x-k+1); the empty product 1 when k = 0."""
    _check_order(k)
    x = as_rational(x)
    out = Fraction(1)
    for i in range(k):
        out *= x - i
    return out


def gamma_ratio(beta, alpha: int, hi: int, lo: int) -> Fraction:
    """Gamma(alpha*hi + beta + 1) / Gamma(alpha*lo + beta + 1) as a finite product.

    With a positive integer ``alpha`` the ratio telescopes to
    ``prod_{j = alpha*lo}^{alpha*hi - 1} (beta + 1 + j)``.
    """
    if lo < 0 or hi < lo:
        raise ValueError(f"gamma_ratio needs hi >= lo >= 0, got hi={hi}, lo={lo}")
    if alpha < 1:
        raise ValueError(f"alpha must be a positive integer, got {alpha}")
    beta = as_rational(beta)
    out = Fraction(1)
    for j in range(alpha * lo, alpha * hi):
        out *= beta + 1 + j
    return out


def gen_binomial(x, k: int) -> Fraction:
    """Binomial coefficient with a rational top: falling_factorial(x, k) / k!."""
    return falling_factorial(x, k) / math.factorial(k)

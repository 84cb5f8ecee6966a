"""Dense univariate polynomials in z over the rationals."""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .scalar import as_rational, format_rational, parse_rational

__all__ = [
    "MINUS_INFINITY",
    "Poly",
    "poly_add",
    "poly_scale",
    "poly_mul",
    "poly_eval",
]


class _MinusInfinity:
    """Degree of the zero polynomial.

    Orders below every integer but refuses arithmetic, so a zero degree can
    never leak into an index computation unnoticed.
    """

    __slots__ = ()

    def __repr__(self) -> str:
        return "MINUS_INFINITY"

    def __lt__(self, other):
        if isinstance(other, int):
            return True
        return NotImplemented

    def __le__(self, other):
        if isinstance(other, (int, _MinusInfinity)):
            return True
        return NotImplemented

    def __gt__(self, other):
        if isinstance(other, (int, _MinusInfinity)):
            return False
        return NotImplemented

    def __ge__(self, other):
        if isinstance(other, _MinusInfinity):
            return True
        if isinstance(other, int):
            return False
        return NotImplemented


MINUS_INFINITY = _MinusInfinity()


class Poly:
    """Immutable polynomial; ``coeffs[i]`` is the coefficient of z**i.

    Trailing zeros are trimmed on construction, so the zero polynomial has an
    empty coefficient tuple and ``degree`` :data:`MINUS_INFINITY`.

    >>> Poly([1, -2, Fraction(1, 2)]).degree
    2
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        c = [as_rational(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self._coeffs: tuple[Fraction, ...] = tuple(c)

    @classmethod
    def constant(cls, c) -> Poly:
        return cls([c])

    @classmethod
    def linear(cls, c0, c1) -> Poly:
        """c0 + c1*z."""
        return cls([c0, c1])

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._coeffs

    @property
    def degree(self):
        if not self._coeffs:
            return MINUS_INFINITY
        return len(self._coeffs) - 1

    def is_zero(self) -> bool:
        return not self._coeffs

    def coeff(self, i: int) -> Fraction:
        if 0 <= i < len(self._coeffs):
            return self._coeffs[i]
        return Fraction(0)

    def leading(self) -> Fraction:
        return self._coeffs[-1] if self._coeffs else Fraction(0)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self._coeffs == other._coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self._coeffs)

    def __repr__(self):
        return f"Poly({[format_rational(c) for c in self._coeffs]!r})"

    def __str__(self):
        if not self._coeffs:
            return "0"
        terms = []
        for i, c in enumerate(self._coeffs):
            if c == 0:
                continue
            mono = "" if i == 0 else ("z" if i == 1 else f"z^{i}")
            if not mono:
                body = format_rational(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{format_rational(abs(c))}*{mono}"
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        first_sign, first_body = terms[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    def __add__(self, other):
        if isinstance(other, Poly):
            return poly_add(self, other)
        return NotImplemented

    def __neg__(self):
        return Poly(-c for c in self._coeffs)

    def __sub__(self, other):
        if isinstance(other, Poly):
            return poly_add(self, -other)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, Poly):
            return poly_mul(self, other)
        try:
            return poly_scale(as_rational(other), self)
        except TypeError:
            return NotImplemented

    __rmul__ = __mul__

    def __call__(self, at) -> Fraction:
        return poly_eval(self, at)

    def to_strings(self) -> list[str]:
        """Coefficients as ``"p/q"`` strings, constant term first."""
        return [format_rational(c) for c in self._coeffs]

    @classmethod
    def from_strings(cls, items: Sequence[str]) -> Poly:
        return cls(parse_rational(s) for s in items)


ZERO = Poly()
ONE = Poly([1])
Z = Poly([0, 1])


def poly_add(p: Poly, q: Poly) -> Poly:
    a, b = p.coeffs, q.coeffs
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return Poly(out)


def poly_scale(c, p: Poly) -> Poly:
    c = as_rational(c)
    if c == 0:
        return ZERO
    return Poly(c * x for x in p.coeffs)


def poly_mul(p: Poly, q: Poly) -> Poly:
    # schoolbook; degrees stay small
    a, b = p.coeffs, q.coeffs
    if not a or not b:
        return ZERO
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    return Poly(out)


def poly_eval(p: Poly, at) -> Fraction:
    """Horner evaluation at an exact rational point."""
    at = as_rational(at)
    acc = Fraction(0)
    for c in reversed(p.coeffs):
        acc = acc * at + c
    return acc

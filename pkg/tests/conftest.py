from __future__ import annotations

from fractions import Fraction

import pytest
import sympy as sp

from genlaguerre import Poly

ALPHAS = (1, 2, 3)
BETAS = (Fraction(0), Fraction(1, 2), Fraction(-1, 3), Fraction(7, 2))

# filled by test_acceptance, printed once at the end of the session
ACCEPTANCE_LINES: list[str] = []

_z = sp.Symbol("z")


def sympy_series(alpha, beta, q: int, n: int) -> Poly:
    """Defining series evaluated with sympy's own Gamma and Pochhammer symbols."""
    b = sp.Rational(beta.numerator, beta.denominator) if isinstance(beta, Fraction) else sp.Rational(beta)
    expr = sp.gamma(alpha * n + b + 1) / sp.gamma(n + 1) * sum(
        sp.rf(-n, q * k) / sp.gamma(alpha * k + b + 1) * _z**k / sp.factorial(k)
        for k in range(n // q + 1)
    )
    coeffs = sp.Poly(sp.expand(expr), _z).all_coeffs()[::-1]
    out = []
    for c in coeffs:
        c = sp.gammasimp(c)
        if not c.is_Rational:
            c = sp.simplify(c)
        assert c.is_Rational, c
        out.append(Fraction(int(c.p), int(c.q)))
    return Poly(out)


def sympy_classical(beta, n: int) -> Poly:
    b = sp.Rational(beta.numerator, beta.denominator)
    expr = sp.expand(sp.assoc_laguerre(n, b, _z))
    coeffs = sp.Poly(expr, _z).all_coeffs()[::-1] if n else [expr]
    return Poly(Fraction(int(c.p), int(c.q)) for c in map(sp.Rational, coeffs))


@pytest.fixture(params=ALPHAS)
def alpha(request):
    return request.param


@pytest.fixture(params=BETAS, ids=lambda b: f"beta={b}")
def beta(request):
    return request.param


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)

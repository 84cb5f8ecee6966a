import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from genlaguerre.scalar import (
    as_rational,
    falling_factorial,
    format_rational,
    gamma_ratio,
    gen_binomial,
    parse_rational,
    rising_factorial,
)

rationals = st.fractions(min_value=-50, max_value=50, max_denominator=50)


def test_field_ops():
    assert Fraction(1, 2) + Fraction(1, 3) == Fraction(5, 6)
    assert Fraction(2, 4) == Fraction(1, 2)
    assert (Fraction(2, 4).numerator, Fraction(2, 4).denominator) == (1, 2)
    with pytest.raises(ZeroDivisionError):
        Fraction(1, 3) / 0


@pytest.mark.parametrize("x, k, expected", [
    (-3, 2, 6),
    (Fraction(7, 5), 0, 1),
    (Fraction(1, 2), 3, Fraction(15, 8)),
])
def test_rising_factorial(x, k, expected):
    assert rising_factorial(x, k) == expected


@pytest.mark.parametrize("x, k, expected", [
    (5, 2, 20),
    (Fraction(-2, 9), 0, 1),
    (Fraction(3, 2), 2, Fraction(3, 4)),
])
def test_falling_factorial(x, k, expected):
    assert falling_factorial(x, k) == expected


def test_negative_order_rejected():
    with pytest.raises(ValueError):
        rising_factorial(1, -1)


@pytest.mark.parametrize("args, expected", [
    ((0, 1, 3, 0), 6),
    ((Fraction(1, 2), 2, 2, 1), Fraction(63, 4)),
    ((Fraction(-1, 3), 3, 4, 4), 1),
])
def test_gamma_ratio(args, expected):
    assert gamma_ratio(*args) == expected


def test_gamma_ratio_descending_is_error():
    with pytest.raises(ValueError):
        gamma_ratio(0, 1, 1, 2)


@pytest.mark.parametrize("x, k, expected", [
    (5, 2, 10),
    (Fraction(4, 7), 0, 1),
    (Fraction(1, 2), 2, Fraction(-1, 8)),
])
def test_gen_binomial(x, k, expected):
    assert gen_binomial(x, k) == expected


def test_gen_binomial_pascal():
    for m in range(21):
        for k in range(m + 1):
            assert gen_binomial(m, k) == math.comb(m, k)


@given(rationals, st.integers(0, 30))
def test_rising_is_signed_falling(x, k):
    assert rising_factorial(x, k) == (-1) ** k * falling_factorial(-x, k)


@given(st.fractions(min_value=Fraction(-29, 30), max_value=10, max_denominator=30),
       st.integers(1, 4), st.integers(0, 6), st.integers(0, 6), st.integers(0, 6))
def test_gamma_ratio_telescopes(beta, alpha, a, b, c):
    lo, mid, hi = sorted((a, b, c))
    assert gamma_ratio(beta, alpha, hi, lo) == gamma_ratio(beta, alpha, hi, mid) * gamma_ratio(beta, alpha, mid, lo)


@given(rationals, st.integers(0, 12))
def test_results_in_lowest_terms(x, k):
    for r in (rising_factorial(x, k), falling_factorial(x, k), gen_binomial(x, k)):
        assert math.gcd(r.numerator, r.denominator) == 1
        assert r.denominator > 0


@pytest.mark.parametrize("text, expected", [
    ("1/3", Fraction(1, 3)),
    ("-6/4", Fraction(-3, 2)),
    ("7", Fraction(7)),
    ("0.5", Fraction(1, 2)),
    ("-0.125", Fraction(-1, 8)),
])
def test_parse(text, expected):
    assert parse_rational(text) == expected


@pytest.mark.parametrize("bad", ["", "abc", "1/0", "nan", "inf", "1/2/3"])
def test_parse_rejects(bad):
    with pytest.raises(ValueError):
        parse_rational(bad)


@pytest.mark.parametrize("x, text", [(Fraction(-1, 3), "-1/3"), (Fraction(7), "7"), (Fraction(0), "0")])
def test_format(x, text):
    assert format_rational(x) == text


@given(rationals)
def test_format_roundtrip(x):
    assert parse_rational(format_rational(x)) == x


def test_no_float_coercion():
    with pytest.raises(TypeError):
        as_rational(0.5)
    assert as_rational(3) == 3

import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from hbarlpt.exact import (
    TruncatedSeries,
    as_rational,
    parse_rational,
    parse_rational_list,
    render_decimal,
    sqrt_exact,
)

big_ints = st.integers(min_value=-(2**128), max_value=2**128)
big_pos = st.integers(min_value=1, max_value=2**128)
rationals = st.builds(Fraction, big_ints, big_pos)


def test_arithmetic_examples():
    assert Fraction(1, 2) + Fraction(1, 3) == Fraction(5, 6)
    assert Fraction(3, 4) * Fraction(-2, 9) == Fraction(-1, 6)
    with pytest.raises(ZeroDivisionError):
        Fraction(1) / Fraction(0)


@pytest.mark.parametrize("a, root", [(Fraction(9, 4), Fraction(3, 2)), (Fraction(1), Fraction(1)), (Fraction(0), Fraction(0))])
def test_sqrt_exact(a, root):
    assert sqrt_exact(a) == root


@pytest.mark.parametrize("a", [Fraction(2), Fraction(9, 8), Fraction(-4)])
def test_sqrt_exact_rejects(a):
    with pytest.raises(ValueError):
        sqrt_exact(a)


@given(rationals)
def test_sqrt_of_square_roundtrips(a):
    assert sqrt_exact(a * a) == abs(a)


@pytest.mark.parametrize(
    "value, digits, text",
    [
        (Fraction(33, 100), 10, "0.3300000000"),
        (Fraction(1, 18), 11, "0.05555555556"),
        (Fraction(-1, 2), 3, "-0.500"),
        (Fraction(5, 1000), 2, "0.00"),  # half to even
        (Fraction(15, 1000), 2, "0.02"),
        (Fraction(-25, 1000), 2, "-0.02"),
        (Fraction(7), 1, "7.0"),
    ],
)
def test_render_decimal(value, digits, text):
    assert render_decimal(value, digits) == text


def test_render_decimal_digits_validated():
    with pytest.raises(ValueError):
        render_decimal(Fraction(1, 3), 0)


@given(rationals, st.integers(min_value=1, max_value=30))
def test_render_decimal_error_bound(a, digits):
    back = Fraction(render_decimal(a, digits))
    assert abs(back - a) <= Fraction(1, 2) / 10**digits


@given(rationals, rationals, rationals)
def test_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a + b == b + a
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c


@given(st.lists(rationals, min_size=1, max_size=8), st.sampled_from(["+", "-", "*", "/"]))
def test_canonical_form(values, op):
    acc = values[0]
    for v in values[1:]:
        if op == "/" and v == 0:
            continue
        acc = {"+": acc + v, "-": acc - v, "*": acc * v, "/": acc / v if v else acc}[op]
    assert acc.denominator > 0
    assert math.gcd(acc.numerator, acc.denominator) == 1


@pytest.mark.parametrize(
    "token, value",
    [("0.04", Fraction(1, 25)), ("1/25", Fraction(1, 25)), ("-3", Fraction(-3)), ("2.5e-3", Fraction(1, 400)), (" 7/2 ", Fraction(7, 2))],
)
def test_parse_rational(token, value):
    assert parse_rational(token) == value


@pytest.mark.parametrize("token", ["abc", "1/0.5", "nan", "inf", "", "1//2", "1/0"])
def test_parse_rational_rejects(token):
    with pytest.raises(ValueError):
        parse_rational(token)


def test_parse_list_and_float_refusal():
    assert parse_rational_list("-1, 1/7,0.5") == [Fraction(-1), Fraction(1, 7), Fraction(1, 2)]
    assert parse_rational_list("") == []
    with pytest.raises(TypeError):
        as_rational(0.1)


def _brute_product(a, b):
    out = {}
    for p, x in enumerate(a):
        for q, y in enumerate(b):
            out[p + q] = out.get(p + q, Fraction(0)) + x * y
    return out


@given(
    st.lists(rationals, min_size=1, max_size=7),
    st.lists(rationals, min_size=1, max_size=7),
    st.integers(-5, 5),
    st.integers(-5, 5),
)
def test_series_product_is_truncated_convolution(a, b, la, lb):
    prod = TruncatedSeries(a, la) * TruncatedSeries(b, lb)
    full = _brute_product(a, b)
    assert prod.order == min(len(a), len(b)) - 1
    assert prod.leading_power == la + lb
    for i, c in enumerate(prod.coefficients):
        assert c == full[i]


def test_series_add_truncates_and_checks_power():
    s = TruncatedSeries([1, 2, 3], 1) + TruncatedSeries([1, 1], 1)
    assert s.coefficients == (Fraction(2), Fraction(3))
    with pytest.raises(ValueError):
        TruncatedSeries([1], 0) + TruncatedSeries([1], 1)

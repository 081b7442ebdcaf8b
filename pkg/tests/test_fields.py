from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from partialskew.errors import ParseError
from partialskew.fields import GF, QQ, parse_field

nonzero_rationals = st.fractions(
    min_value=-1000, max_value=1000, max_denominator=50).filter(bool)


@given(nonzero_rationals)
def test_rational_inverse_cancels(a):
    assert a * (1 / a) == QQ.one


@given(st.fractions(max_denominator=30), st.fractions(max_denominator=30),
       st.fractions(max_denominator=30))
def test_rational_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    assert a + QQ.zero == a and a * QQ.one == a


def test_rational_parse():
    assert QQ.parse("-3/2") == Fraction(-3, 2)
    assert QQ.parse("−3/2") == Fraction(-3, 2)  # unicode minus
    assert QQ.parse("7") == Fraction(7)
    with pytest.raises(ParseError):
        QQ.parse("x")
    with pytest.raises(ParseError):
        QQ.parse("1/0")


@given(st.integers(-100, 100), st.integers(-100, 100))
def test_prime_field_arithmetic(x, y):
    f = GF(7)
    a, b = f.from_int(x), f.from_int(y)
    assert a + b == f.from_int(x + y)
    assert a * b == f.from_int(x * y)
    if b:
        assert (a / b) * b == a


def test_prime_field_inverse_scan():
    f = GF(11)
    for n in range(1, 11):
        a = f.from_int(n)
        assert a * (f.one / a) == f.one


def test_prime_field_parse_and_validation():
    f = GF(5)
    assert f.parse("7") == f.from_int(2)
    assert f.parse("1/2") == f.from_int(3)  # 2*3 = 6 = 1 mod 5
    with pytest.raises(ValueError):
        GF(6)
    with pytest.raises(ParseError):
        f.parse("1/5")


def test_fields_mix_rejected():
    with pytest.raises(TypeError):
        GF(5).one + GF(7).one


def test_field_tokens():
    assert parse_field("q") == QQ
    assert parse_field("fp:13") == GF(13)
    assert GF(5) == GF(5) and GF(5) != GF(7) and QQ != GF(5)
    with pytest.raises(ParseError):
        parse_field("r")

# convexpoly - exact convex polygon and convex sequence toolkit

from decimal import Decimal
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from convexpoly.exceptions import ParseError, ZeroDenominator
from convexpoly.scalar import Ordering, as_scalar, cmp, parse_scalar, render_scalar, sign


@pytest.mark.parametrize('text, expected', [
    ('3/4', Fraction(3, 4)),
    ('6/-4', Fraction(-3, 2)),
    ('-2.5', Fraction(-5, 2)),
    ('0.1', Fraction(1, 10)),
    (' 7 ', Fraction(7)),
    ('+12', Fraction(12)),
    ('5.', Fraction(5)),
    ('-0', Fraction(0)),
])
def test_parse_scalar(text, expected):
    assert parse_scalar(text) == expected


@pytest.mark.parametrize('text', ['1e3', 'nan', 'inf', '', 'abc', '1/2/3', '.5', '1_000', '0x10'])
def test_parse_scalar_rejects(text):
    with pytest.raises(ParseError):
        parse_scalar(text)


def test_parse_scalar_zero_denominator():
    with pytest.raises(ZeroDenominator):
        parse_scalar('1/0')
    # ZeroDenominator is a ParseError, which is a ValueError
    with pytest.raises(ValueError):
        parse_scalar('-3/0')


def test_parse_scalar_non_string():
    with pytest.raises(ParseError):
        parse_scalar(3)


def test_decimal_text_is_exact():
    assert parse_scalar('0.1') + parse_scalar('0.2') == parse_scalar('0.3')


def test_render_scalar():
    assert render_scalar(Fraction(6, 4)) == '3/2'
    assert render_scalar(Fraction(-4, 2)) == '-2'
    assert render_scalar(0) == '0'


@given(st.fractions())
def test_render_parse(a):
    assert parse_scalar(render_scalar(a)) == a


def test_as_scalar():
    assert as_scalar(3) == Fraction(3)
    assert as_scalar(Decimal('0.1')) == Fraction(1, 10)
    assert as_scalar('1/3') == Fraction(1, 3)
    f = Fraction(2, 7)
    assert as_scalar(f) is f


@pytest.mark.parametrize('value', [0.5, True, None, Decimal('NaN'), Decimal('Infinity'), [1]])
def test_as_scalar_rejects(value):
    with pytest.raises(ParseError):
        as_scalar(value)


@given(st.fractions(), st.fractions())
def test_cmp_matches_operators(a, b):
    o = cmp(a, b)
    assert (o is Ordering.LESS) == (a < b)
    assert (o is Ordering.EQUAL) == (a == b)
    assert (o is Ordering.GREATER) == (a > b)
    assert cmp(b, a) is o.reversed()


@given(st.fractions(), st.fractions(), st.fractions())
def test_cmp_is_transitive(a, b, c):
    if cmp(a, b) is not Ordering.GREATER and cmp(b, c) is not Ordering.GREATER:
        assert cmp(a, c) is not Ordering.GREATER
    if cmp(a, b) is Ordering.LESS and cmp(b, c) is Ordering.LESS:
        assert cmp(a, c) is Ordering.LESS
    if cmp(a, b) is Ordering.EQUAL and cmp(b, c) is Ordering.EQUAL:
        assert cmp(a, c) is Ordering.EQUAL
    x, y, z = sorted((a, b, c))
    assert cmp(x, y) is not Ordering.GREATER
    assert cmp(y, z) is not Ordering.GREATER
    assert cmp(x, z) is not Ordering.GREATER


@given(st.fractions(), st.fractions())
def test_arithmetic_is_exact(a, b):
    a, b = as_scalar(a), as_scalar(b)
    assert (a + b) - b == a
    assert cmp((a + b) - b, a) is Ordering.EQUAL
    if b != 0:
        assert (a * b) / b == a


def test_ordering():
    assert Ordering.of(-7) is Ordering.LESS
    assert Ordering.of(0) is Ordering.EQUAL
    assert Ordering.of(3) is Ordering.GREATER
    assert [o.symbol for o in Ordering] == ['<', '=', '>']
    assert Ordering.GREATER.sign == 1


def test_sign():
    assert sign(Fraction(-1, 3)) == -1
    assert sign(Fraction(0)) == 0
    assert sign(Fraction(5, 2)) == 1

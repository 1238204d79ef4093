from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from brownalg.qi import QI, I, ONE, ZERO, format_qi, parse_qi, pow_i, qi

rationals = st.fractions(min_value=-1000, max_value=1000, max_denominator=1000)
gaussians = st.builds(QI, rationals, rationals)


def test_basic_arithmetic():
    assert QI(1, 1) * QI(1, -1) == QI(2)
    assert I.inverse() == QI(0, -1)
    assert QI(Fraction(3, 2)) + QI(Fraction(1, 2)) == QI(2)
    assert QI(Fraction(1, 3), -2).conj() == QI(Fraction(1, 3), 2)
    assert QI(2).conj() == QI(2)


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        ONE / ZERO


@pytest.mark.parametrize("k,val", [(0, ONE), (1, I), (2, QI(-1)),
                                   (3, QI(0, -1)), (7, QI(0, -1)), (-1, QI(0, -1))])
def test_pow_i(k, val):
    assert pow_i(k) == val


@given(gaussians, gaussians, gaussians)
def test_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a and a * b == b * a
    if a:
        assert a * a.inverse() == ONE


@given(gaussians, gaussians)
def test_conj_is_automorphism(a, b):
    assert (a * b).conj() == a.conj() * b.conj()
    assert a.conj().conj() == a


@given(gaussians)
def test_codec_round_trip(a):
    assert parse_qi(format_qi(a)) == a


@pytest.mark.parametrize("text,val", [
    ("0", ZERO), ("2", QI(2)), ("-1/3*i", QI(0, Fraction(-1, 3))),
    ("1/2+2*i", QI(Fraction(1, 2), 2)), ("-1-1*i", QI(-1, -1)),
])
def test_codec_examples(text, val):
    assert parse_qi(text) == val
    assert format_qi(val) == text


def test_codec_rejects_garbage():
    for bad in ("", "i", "1+i", "2x", "1/0"):
        with pytest.raises((ValueError, ZeroDivisionError)):
            parse_qi(bad)

from fractions import Fraction

import pytest

from ppialg.scalars import IMAG, ONE, ZERO, GaussianRational


def test_arithmetic():
    a = GaussianRational(Fraction(1, 2), Fraction(3))
    b = GaussianRational(Fraction(2), Fraction(-1, 3))
    assert a + b == GaussianRational(Fraction(5, 2), Fraction(8, 3))
    assert a - a == ZERO
    assert IMAG * IMAG == -ONE
    assert (a * b) / b == a
    assert a.conjugate().conjugate() == a
    assert complex(IMAG) == 1j


def test_coerce_ints_and_fractions():
    assert GaussianRational.coerce(3) == GaussianRational(Fraction(3))
    assert GaussianRational(2, 1) + 1 == GaussianRational(3, 1)
    assert 2 * GaussianRational(1, 1) == GaussianRational(2, 2)


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        ONE / ZERO


def test_str_forms():
    cases = {
        ZERO: "0",
        ONE: "1",
        -ONE: "-1",
        IMAG: "i",
        -IMAG: "-i",
        GaussianRational(0, 2): "2i",
        GaussianRational(Fraction(1, 2), Fraction(-3)): "1/2-3i",
        GaussianRational(1, 1): "1+i",
        GaussianRational(0, Fraction(2, 5)): "2/5i",
    }
    for value, text in cases.items():
        assert str(value) == text


def test_parse_round_trip():
    samples = ["0", "1", "-1", "i", "-i", "2i", "1+2i", "1/2-3i", "-3/4", "2/5i", "1-i"]
    for text in samples:
        assert str(GaussianRational.parse(text)) == text


def test_parse_rejects_garbage():
    with pytest.raises(ValueError):
        GaussianRational.parse("")
    with pytest.raises(ValueError):
        GaussianRational.parse("2x")

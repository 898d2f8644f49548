from fractions import Fraction

import pytest

from reedecomp.algebra.qs2 import R2, QS2


def test_arithmetic_in_qs2():
    a = QS2(1, 1)
    b = QS2(1, -1)
    assert a * b == -1
    assert a + b == 2
    assert R2 * R2 == 2
    assert (a / b) * b == a
    assert a.conj() == b


def test_sign_is_exact():
    # 3 - 2 r2 = 0.1715...
    assert QS2(3, -2).sign() == 1
    assert QS2(-3, 2).sign() == -1
    # 1 - r2 < 0 < r2 - 1
    assert QS2(1, -1) < 0 < QS2(-1, 1)
    assert QS2().sign() == 0


def test_floor_and_ceil():
    assert R2.floor() == 1
    assert R2.ceil() == 2
    assert (-R2).floor() == -2
    assert QS2(Fraction(7, 2)).floor() == 3
    assert QS2(Fraction(-7, 2)).ceil() == -3
    # 10 r2 = 14.142...
    assert QS2(0, 10).floor() == 14


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        QS2(1) / QS2()


def test_canonical_strings():
    assert str(QS2(1, -1)) == '1-r2'
    assert str(R2) == 'r2'
    assert str(QS2(Fraction(1, 2), Fraction(1, 4))) == '1/2+1/4*r2'
    assert str(QS2(3)) == '3'


def test_enclosure_contains_value():
    lo, hi = QS2(1, 3).enclosure(12)
    assert lo <= 1 + 3 * Fraction(14142135623730, 10**13) <= hi
    assert hi - lo <= Fraction(3, 10**12)

import pytest

from reedecomp.algebra.factors import FACTORS, PHI8M, PHI8P, group_order, group_order_at
from reedecomp.algebra.qpoly import Q, QPoly, q_value
from reedecomp.algebra.qs2 import R2, QS2
from reedecomp.errors import InexactDivisionError


def test_q_values():
    # q^2 = 2^(2n+1)
    for n in range(0, 6):
        assert q_value(n) ** 2 == 2 ** (2 * n + 1), f'n={n}'
    assert (Q**2 + 1).eval_at_q(1) == 9
    assert PHI8P.eval_at_q(1) == 13
    assert PHI8M.eval_at_q(1) == 5


def test_exact_division():
    assert (Q**2 - 1).exactdiv(Q - 1) == Q + 1
    assert PHI8P * PHI8M == Q**4 + 1
    assert (Q**4 + 1).exactdiv(PHI8M) == PHI8P
    quotient, remainder = divmod(Q**2 + 1, Q - 1)
    assert quotient == Q + 1
    assert remainder == 2


def test_inexact_division_names_remainder():
    with pytest.raises(InexactDivisionError) as e:
        (Q**2 + 1).exactdiv(Q - 1)
    assert e.value.remainder == QPoly([2])


def test_canonical_strings():
    assert str(PHI8P) == 'q^2+r2*q+1'
    assert str(PHI8M) == 'q^2-r2*q+1'
    assert str(QPoly()) == '0'
    assert str(QPoly([0, QS2(1, 1)])) == '(1+r2)*q'


def test_conjugation_swaps_the_factors_of_q4_plus_1():
    assert PHI8P.conj() == PHI8M
    assert FACTORS['phi24p'].conj() == FACTORS['phi24m']


def test_group_order():
    # 2F4(2), including the Tits group with index 2
    assert group_order_at(0) == 35942400
    assert group_order().degree == 52
    assert group_order().coeff(52) == 1
    q_squared = 8
    expected = (
        q_squared**12
        * (q_squared - 1) ** 2
        * (q_squared + 1) ** 2
        * (q_squared**2 + 1) ** 2
        * (q_squared**2 - q_squared + 1)
        * (q_squared**4 - q_squared**2 + 1)
    )
    assert group_order_at(1) == expected


def test_evaluate_irrational_coefficients():
    p = QPoly([1, R2, 1])
    assert p.evaluate(R2) == 5
    assert p.values([1, 2]) == [QS2(13), QS2(32 + 8 + 1)]

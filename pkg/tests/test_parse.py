import pytest

from reedecomp.algebra.factors import PHI8P
from reedecomp.algebra.linear import DecompEntry, is_star
from reedecomp.algebra.mpoly import MPoly
from reedecomp.algebra.parse import CountExpr, parse_entry, parse_mpoly, parse_qpoly
from reedecomp.algebra.qpoly import Q, QPoly
from reedecomp.algebra.qs2 import R2


def test_parse_qpoly():
    assert parse_qpoly('q^2+r2*q+1') == PHI8P
    assert parse_qpoly('(q^2+r2*q)/4') == (Q**2 + QPoly([0, R2])) / 4
    assert parse_qpoly('phi8p') == PHI8P


def test_parse_entry():
    assert parse_entry('.') == DecompEntry()
    assert parse_entry('3') == DecompEntry(3)
    entry = parse_entry('4-3*a+d')
    assert entry.const == 4
    assert entry.coefficients == {'a': -3, 'd': 1}
    assert parse_entry('ap').single_unknown() == 'ap'
    assert parse_entry('ap-1').single_unknown() is None
    with pytest.raises(ValueError):
        parse_entry('a*b')
    with pytest.raises(ValueError):
        parse_entry('q-1')


def test_entry_arithmetic():
    a = parse_entry('b-1')
    b = parse_entry('c+1')
    assert a + b == parse_entry('b+c')
    assert a.scale(-2) == parse_entry('2-2*b')
    assert parse_entry('2*b+c').evaluate({'b': 3, 'c': 1}) == 7
    assert str(parse_entry('4-3*a+d')) == '-3*a+d+4'


def test_parse_mpoly_with_q_shift():
    p = parse_mpoly('r2*x/q+1', q_shift=1)
    assert p == MPoly.var('x') * R2 + Q
    assert p.variables == ['x']


def test_mpoly_substitute_and_coefficients():
    p = parse_mpoly('x*h*q^2-x*q+3')
    assert p.substitute({'h': 1, 'x': 2}) == MPoly.coerce(2 * Q**2 - 2 * Q + 3)
    assert p.q_coefficient(1) == -MPoly.var('x')
    assert p.q_degree() == 2
    assert p.remove_q_term((('x', 1),), 1) == parse_mpoly('x*h*q^2+3')


def test_count_expressions():
    count = CountExpr('(L-3)*(L-9)/48')
    assert count.evaluate(9) == 0
    assert count.evaluate(27) == 9
    assert count == CountExpr('(L^2-12*L+27)/48')
    with pytest.raises(ValueError):
        CountExpr('q-1')


def test_star_names():
    assert is_star('st_C3_19_13')
    assert not is_star('x15')

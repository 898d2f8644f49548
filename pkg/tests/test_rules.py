from fractions import Fraction

import pytest

from reedecomp.algebra.qpoly import QPoly
from reedecomp.algebra.qs2 import R2, QS2
from reedecomp.bounds.engine import derive_inequality
from reedecomp.degrees.inequalities import (
    DegreeRule,
    apply_rules,
    coefficient_diff,
    inequality_set_phi8p,
    printed_rules,
    rule_power,
    top_degree,
    verify_coefficients,
    verify_inequalities,
)
from reedecomp.types import PrimeCase


def test_printed_rules_are_derived():
    rules = verify_inequalities(PrimeCase.PHI8P)
    assert [r.unknown for r in rules] == ['w', 't', 'r', 'u', 'v']
    weights = {r.unknown: r.weight for r in rules}
    assert weights == {'w': 1, 't': Fraction(1, 2), 'r': Fraction(1, 12), 'u': Fraction(1, 2), 'v': Fraction(1, 3)}
    assert {r.unknown: r.power for r in rules} == {'w': 22, 't': 20, 'r': 20, 'u': 20, 'v': 20}


def test_unprinted_rules_phi8m():
    rules = verify_inequalities(PrimeCase.PHI8M)
    assert len(rules) == len(printed_rules(PrimeCase.PHI8M)) == 5
    assert all(r.printed.rhs_times_q is None for r in rules)


def test_derive_inequality():
    rule = derive_inequality(PrimeCase.PHI8P, "Psi13'", 'chi21', 'u')
    assert rule.divisor == QPoly([0, R2 / 2])
    assert rule.row == 'chi21' and rule.projective == "Psi13'"
    assert rule.rhs_times_q.variables == ['h', 'x']
    with pytest.raises(ValueError):
        derive_inequality(PrimeCase.PHI8P, "Psi13'", 'chi10_a', 'u')
    with pytest.raises(ValueError):
        derive_inequality(PrimeCase.PHI8P, "Psi13'", 'chi21', 'h')


def test_rule_power():
    degree = top_degree(PrimeCase.PHI8P)
    assert rule_power(degree, 'x') == (23, -R2)
    assert rule_power(degree, 'w') == (22, QS2(-1))
    with pytest.raises(ValueError):
        rule_power(degree, 'zz')


def test_apply_rules_rewrites_terms():
    degree = top_degree(PrimeCase.PHI8P)
    rules = inequality_set_phi8p()
    applied = apply_rules(degree, rules)
    assert applied != degree
    # later rules bring w back into q^22, with a nonnegative coefficient
    w = applied.coefficient((('w', 1),)).coeff(22)
    assert w.sign() >= 0, f'{w}'
    assert w - degree.coefficient((('w', 1),)).coeff(22) >= rules[0].weight
    assert applied.q_coefficient(24) == 1


def test_apply_rules_checks_coefficient():
    degree = top_degree(PrimeCase.PHI8P)
    rule = inequality_set_phi8p()[0]
    wrong = DegreeRule(rule.derived, rule.power, rule.weight * 2)
    with pytest.raises(AssertionError):
        apply_rules(degree, [wrong])


def test_leading_coefficients():
    coefficients = verify_coefficients(PrimeCase.PHI8P)
    assert sorted(coefficients) == [20, 21, 22, 23, 24]
    assert coefficients[24] == 1
    assert coefficients[23].linear_coefficient('x') == -R2
    assert not coefficient_diff(PrimeCase.LINEAR)

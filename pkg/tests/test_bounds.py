import pytest

from reedecomp.algebra.parse import parse_qpoly
from reedecomp.algebra.qpoly import QPoly
from reedecomp.bounds.engine import (
    BoundSet,
    LowerBound,
    UpperBound,
    bound_set,
    case_blocks,
    corollary_pins,
    g5_block,
    hidden_lower_bounds,
    lower_bounds,
)
from reedecomp.bounds.projectives import case_projectives, find_projective, projective_multiplicities
from reedecomp.bounds.reference import EQUAL, FAILING, SHARPER, compare_bounds, pins_diff, reference_pins, verify_pins
from reedecomp.decomp.matrix import decomposition_matrix
from reedecomp.errors import InconsistentBoundsError
from reedecomp.types import TABULATED_CASES, PrimeCase


def _uppers(case, unknown):
    return [b.value for b in bound_set(case).upper.get(unknown, [])]


def test_lower_bounds_phi8p():
    best, conditional = lower_bounds(PrimeCase.PHI8P)
    values = {u: b.value for u, b in best.items()}
    assert values == {'h': 1, 'j': 1, 's': 1, 'u': 1, 'w': 1, 'x': 1}
    assert best['h'].row == 'chi10_b'
    assert [b.value for b in conditional['s']] == [2]
    assert [b.value for b in conditional['x']] == [2]
    assert str(conditional['x'][0].count) == '(L-1)*(L-5)/96'
    assert conditional['x'][0].conditional


def test_upper_bounds_phi8p():
    assert parse_qpoly('r2*q/4') in _uppers(PrimeCase.PHI8P, 'h')
    assert parse_qpoly('r2*q/4') in _uppers(PrimeCase.PHI8P, 'j')
    assert parse_qpoly('(q^2+3*r2*q+4)/12') in _uppers(PrimeCase.PHI8P, 'u')
    assert parse_qpoly('r2*q/2') in _uppers(PrimeCase.PHI8P, 'x')
    bs = bound_set(PrimeCase.PHI8P)
    assert bs.interval_at('h', 1, 13) == (1, 1)
    assert bs.interval_at('x', 1, 13) == (2, 2)
    # (chi19, Psi18') / m18 = (q^2+2)/(r2*q) is not a polynomial
    assert any(s.unknown == 'j' and 'inexact' in s.reason for s in bs.skipped)


def test_upper_bounds_phi8m():
    bs = bound_set(PrimeCase.PHI8M)
    assert any(b.rule == 'R3' for b in bs.upper['x'])
    assert bs.interval_at('x', 1, 5) == (0, 0)
    assert parse_qpoly('(r2*q-4)/4') in _uppers(PrimeCase.PHI8M, 'e')


def test_every_bound_is_reproduced():
    for case in TABULATED_CASES:
        comparisons = compare_bounds(case, ns=range(1, 201))
        failing = [c for c in comparisons if c.verdict in FAILING]
        assert not failing, f'{case}: {failing}'
        for c in comparisons:
            if c.kind == 'lower':
                assert c.verdict in (EQUAL, SHARPER, 'encoded-only'), f'{case}: {c}'


def test_conditional_bounds_follow_congruences():
    comparisons = compare_bounds(PrimeCase.PHI8P, ns=range(1, 201))
    conditional = [c for c in comparisons if c.kind == 'conditional']
    assert {c.unknown for c in conditional} == {'s', 'x'}
    assert all(c.verdict == EQUAL for c in conditional), conditional


def test_pins():
    assert corollary_pins(PrimeCase.PHI8P, 1, 13) == {'h': 1, 'j': 1, 'x': 2}
    assert corollary_pins(PrimeCase.PHI8M, 1, 5) == {'a': 0, 'e': 0, 'j': 0, 's': 1, 't': 0, 'x': 0}
    assert corollary_pins(PrimeCase.ELL3, 1, 3) == {'c': 1}
    for case in (PrimeCase.PHI8P, PrimeCase.PHI8M, PrimeCase.ELL3):
        assert reference_pins(case)
        assert not pins_diff(case)
        verify_pins(case)


def test_g5_block():
    block = g5_block()
    assert not block.diff
    assert block.lower == 2
    assert block.upper == parse_qpoly('(q^2-r2*q)/4')
    assert [b.name for b in case_blocks(PrimeCase.PHI4)][:2] == ['unipotent', 'g5']
    with pytest.raises(ValueError):
        g5_block(PrimeCase.PHI8P)


def test_multiplicities_of_a_projective():
    m = decomposition_matrix(PrimeCase.PHI8P)
    psi = find_projective(PrimeCase.PHI8P, "Psi13'")
    multiplicities = projective_multiplicities(psi, m)
    assert multiplicities['phi13'] == parse_qpoly('r2*q/2')
    assert not multiplicities['phi14']
    assert len(case_projectives(PrimeCase.PHI8P)) == 24
    with pytest.raises(ValueError):
        find_projective(PrimeCase.PHI8P, 'Psi99')


def test_hidden_lower_bounds():
    hidden = hidden_lower_bounds(PrimeCase.PHI8P)
    printed = decomposition_matrix(PrimeCase.PHI8P)
    assert hidden
    assert all(h.row in printed.relation_rows for h in hidden)


def test_empty_interval_raises():
    bs = BoundSet(
        PrimeCase.PHI8P,
        ('z',),
        lower={'z': LowerBound('z', 3, 'chi19', 'phi9', 'C.3')},
        upper={'z': [UpperBound('z', QPoly([2]), 'R1', 'Psi9', 'chi19', ('phi9',))]},
    )
    with pytest.raises(InconsistentBoundsError):
        bs.interval_at('z', 1, 13)


def test_untabulated_case():
    with pytest.raises(ValueError):
        bound_set(PrimeCase.CYCLIC)

import pytest

from reedecomp.algebra.qs2 import QS2
from reedecomp.bounds.engine import BoundSet, bound_set
from reedecomp.catalog.characters import d0
from reedecomp.cli.main import SMALLEST_DEGREE_CHECKS
from reedecomp.degrees.smallest import (
    FAILS,
    HOLDS,
    INCONCLUSIVE,
    PARTIAL,
    SMALLEST,
    ColumnDegree,
    interval_degrees,
    lower_bound_deg,
    verify_theorem,
)
from reedecomp.types import PrimeCase


def test_column_degree():
    exact = ColumnDegree('phi2', 10, None, 'exact')
    assert exact.status == 'exact' and exact.equals(10) and exact.exceeds(9)
    bounded = ColumnDegree('phi21', None, QS2(11), 'direct, n=1')
    assert bounded.status == 'bounded' and bounded.exceeds(10) and not bounded.exceeds(11)
    assert ColumnDegree('phi18', None, None, 'no bound').status == 'unbounded'


def test_phi21_bound_phi8p():
    bound, degree = lower_bound_deg('phi21', PrimeCase.PHI8P, 1, 13)
    assert bound is not None
    assert bound.value > d0(1), f'{bound}'
    assert degree.q_degree() == 24


def test_linear_degrees_are_exact():
    report = verify_theorem(PrimeCase.LINEAR, 1, 7)
    assert report.verdict == HOLDS
    assert all(c.status == 'exact' for c in report.columns)
    assert all(report.column(c).equals(d0(1)) for c in SMALLEST)
    with pytest.raises(ValueError):
        report.column('phi1')


def test_smallest_degree_holds_for_n_up_to_3():
    checked = set()
    for case, n, ell in SMALLEST_DEGREE_CHECKS:
        if case == PrimeCase.ELL3:
            continue
        checked.add((case, n))
        report = verify_theorem(case, n, ell)
        assert report.verdict not in (FAILS, INCONCLUSIVE), f'{case} n={n} l={ell}: {report.unresolved}'
        assert not report.unresolved
    assert len(checked) == 11


def test_ell3_is_partial():
    report = verify_theorem(PrimeCase.ELL3, 1, 3)
    assert report.verdict == PARTIAL
    assert set(report.unresolved) <= {'phi18', 'phi21'}
    assert report.pins == {'c': 1}


def test_phi10_ell3_from_degree_positivity():
    # deg(phi10) = chi10(1) - chi8(1) + (x8 - x10) * deg(phi5_1) and chi10(1) < chi8(1)
    bound, degree = lower_bound_deg('phi10', PrimeCase.ELL3, 1, 3)
    assert degree.variables == ['x10', 'x8']
    assert bound is not None
    assert bound.method == 'positivity, n=1'
    assert bound.value > d0(1), f'{bound}'
    assert 'phi10' not in verify_theorem(PrimeCase.ELL3, 1, 3).unresolved


def test_phi21_phi8m_uses_inequalities():
    for n, ell in ((2, 5), (3, 113)):
        bound, _ = lower_bound_deg('phi21', PrimeCase.PHI8M, n, ell)
        assert bound is not None
        assert bound.method.startswith('inequalities'), f'n={n}: {bound}'
        assert bound.value > d0(n), f'n={n}: {bound}'


def test_wider_bounds_never_raise_degree_bounds():
    bs = bound_set(PrimeCase.PHI8P)
    wider = BoundSet(bs.case, bs.unknowns, upper=bs.upper, skipped=bs.skipped)
    for column in ('phi10', 'phi13', 'phi18', 'phi21'):
        tight, _ = lower_bound_deg(column, PrimeCase.PHI8P, 1, 13, bs)
        loose, _ = lower_bound_deg(column, PrimeCase.PHI8P, 1, 13, wider)
        if loose is not None:
            assert tight is not None and loose.value <= tight.value, f'{column}: {loose} > {tight}'


def test_case_mismatch():
    with pytest.raises(ValueError):
        verify_theorem(PrimeCase.PHI8P, 1, 7)


def test_interval_degrees():
    linear = interval_degrees(PrimeCase.LINEAR, 1, 7)
    assert linear['phi2'] == (QS2(d0(1)), QS2(d0(1)))
    assert all(lo == hi for lo, hi in linear.values())
    intervals = interval_degrees(PrimeCase.PHI8P, 1, 13)
    lo, hi = intervals['phi2']
    assert lo == hi == d0(1)
    assert all(hi is None or lo <= hi for lo, hi in intervals.values())

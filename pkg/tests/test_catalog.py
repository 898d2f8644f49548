import pytest

from reedecomp.algebra.factors import group_order
from reedecomp.algebra.qpoly import Q, QPoly
from reedecomp.catalog.characters import (
    CONJUGATE_PAIRS,
    FAMILY_SIZES,
    catalog_residual,
    character,
    d0,
    defect_zero_unipotents,
    family,
    series_type,
    series_types,
    sum_of_squares,
    unipotent_char,
    unipotent_characters,
)


def test_unipotent_catalog():
    records = unipotent_characters()
    assert len(records) == 21
    assert unipotent_char(1).degree == 1
    assert unipotent_char(21).degree == Q**24
    assert [r.label for r in records if r.cuspidal] == [f'chi{i}' for i in range(8, 18)]
    for i in range(1, 22):
        for n in range(1, 5):
            # raises if a degree is not an integer
            unipotent_char(i).degree_at(n)
    with pytest.raises(ValueError):
        unipotent_char(22)


def test_families():
    sizes = tuple(len(family(i)) for i in range(1, 8))
    assert sizes == FAMILY_SIZES


def test_conjugate_pairs_share_their_degree():
    for a, b in CONJUGATE_PAIRS:
        assert character(a).degree == character(b).degree, f'{a} {b}'


def test_sum_of_squares_is_the_group_order():
    residual = catalog_residual()
    assert not residual, f'catalog residual={residual}'
    assert sum_of_squares() == group_order()


def test_d0():
    assert d0(1) == 64638
    for n in range(1, 6):
        assert d0(n) == unipotent_char(2).degree_at(n) == unipotent_char(3).degree_at(n)
        others = [r.degree_at(n) for r in unipotent_characters() if r.label not in ('chi1', 'chi2', 'chi3')]
        assert min(others) > d0(n), f'n={n}'


def test_series_types():
    types = series_types()
    assert sorted(types, key=lambda g: int(g[1:])) == [f'g{i}' for i in range(2, 19)]
    assert series_type(2).count == (Q**2 - 2) / 2
    assert series_type('g2') == series_type(2)
    assert len(series_type(2).labels) == 4
    with pytest.raises(ValueError):
        series_type(19)


def test_defect_zero_unipotents():
    # 11 | q^2 + 1 for n = 2
    expected = ['chi2', 'chi3', 'chi5', 'chi6'] + [f'chi{i}' for i in range(10, 17)] + ['chi19', 'chi20']
    assert defect_zero_unipotents(2, 11) == expected
    assert 'chi1' not in defect_zero_unipotents(1, 13)


def test_degree_polynomials_have_rational_values_at_integer_points():
    assert isinstance(unipotent_char(2).degree, QPoly)
    assert unipotent_char(2).degree_at(1) == 64638

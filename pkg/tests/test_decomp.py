from dataclasses import replace

import pytest

from reedecomp.algebra.linear import DecompEntry
from reedecomp.algebra.mpoly import MPoly
from reedecomp.algebra.parse import CountExpr
from reedecomp.catalog.characters import character
from reedecomp.cli.main import REPRESENTATIVES
from reedecomp.decomp.brauer import compare_printed, expanded_matrix, hidden_cells, verify_relations
from reedecomp.decomp.matrix import (
    blocks,
    brauer_degrees,
    check_family_blocks,
    check_unitriangular,
    decomposition_matrix,
    dipper_embedding_diff,
    expand_relations,
    hc_census,
    principal_series_block,
)
from reedecomp.hecke.decomposition import hecke_decomposition
from reedecomp.tables.relations import RelationRow
from reedecomp.types import TABULATED_CASES, PrimeCase


def test_unitriangular():
    for case in TABULATED_CASES:
        m = decomposition_matrix(case)
        assert check_unitriangular(m), f'{case}'
        assert len(m.basic_set) == len(m.columns)


def test_family_blocks():
    for case in TABULATED_CASES:
        if case == PrimeCase.ELL3:
            with pytest.raises(ValueError):
                check_family_blocks(decomposition_matrix(case))
            continue
        assert check_family_blocks(decomposition_matrix(case)), f'{case}'


def test_entry_above_diagonal_is_rejected():
    m = decomposition_matrix(PrimeCase.PHI8P)
    entries = dict(m.entries)
    entries[('chi1', 'phi2')] = DecompEntry.make(1)
    assert not check_unitriangular(replace(m, entries=entries))
    assert not check_family_blocks(replace(m, entries=entries))


def test_permuted_columns_are_rejected():
    m = decomposition_matrix(PrimeCase.PHI4)
    columns = list(m.columns)
    series = list(m.series)
    columns[0], columns[-1] = columns[-1], columns[0]
    series[0], series[-1] = series[-1], series[0]
    permuted = replace(m, columns=tuple(columns), series=tuple(series))
    assert not check_family_blocks(permuted)
    assert not check_unitriangular(permuted)


def test_hc_census():
    assert hc_census(decomposition_matrix(PrimeCase.LINEAR)) == {'ps': 7, '2B2a': 2, '2B2b': 2, 'c': 10}
    assert hc_census(decomposition_matrix(PrimeCase.PHI4)) == {'ps': 4, '2B2a': 2, '2B2b': 2, 'A1': 1, 'c': 12}
    for case in (PrimeCase.PHI8P, PrimeCase.PHI8M):
        assert hc_census(decomposition_matrix(case)) == {'ps': 4, '2B2a': 1, '2B2b': 1, '2B2St': 1, 'c': 14}
    assert hc_census(decomposition_matrix(PrimeCase.ELL3)) == {'ps': 4, '2B2a': 2, '2B2b': 2, 'A1': 1, 'c': 10}


def test_unknowns():
    m = decomposition_matrix(PrimeCase.PHI8P)
    assert m.unknowns() == sorted('abcdeghijrstuvwx')
    assert len(m.unknowns(with_stars=True)) > len(m.unknowns())
    assert decomposition_matrix(PrimeCase.LINEAR).unknowns() == []


def test_relation_rows_match_print():
    for case in TABULATED_CASES:
        expanded = verify_relations(case)
        printed = decomposition_matrix(case)
        assert set(expanded.relation_rows) == set(printed.relation_rows), f'{case}'


def test_hidden_cells_are_stars():
    printed = decomposition_matrix(PrimeCase.PHI8P)
    hidden = hidden_cells(expanded_matrix(PrimeCase.PHI8P, printed), printed)
    assert hidden
    assert all(printed.entry(h.row, h.column).has_star() for h in hidden)
    assert ('chi10_a', 'phi9') in {(h.row, h.column) for h in hidden}


def test_compare_printed_reports_changed_cell():
    printed = decomposition_matrix(PrimeCase.PHI8P)
    expanded = expanded_matrix(PrimeCase.PHI8P, printed)
    label = expanded.relation_rows[0]
    column = next(c for c in printed.columns if not printed.entry(label, c).has_star())
    entries = dict(expanded.entries)
    entries[(label, column)] = entries[(label, column)] + DecompEntry.make(1)
    tampered = replace(expanded, entries=entries)
    diff = compare_printed(tampered, printed)
    assert len(diff) == 1 and diff[0].startswith(f'({label}, {column})')


def test_expand_relations_checks_width():
    m = decomposition_matrix(PrimeCase.PHI8P)
    with pytest.raises(ValueError):
        expand_relations(m, [RelationRow('bad', (1,), CountExpr('1'))])
    with pytest.raises(ValueError):
        expand_relations(m, [], basic_set=('chi1',))


def test_brauer_degrees():
    m = decomposition_matrix(PrimeCase.PHI8P)
    degrees = brauer_degrees(m)
    assert degrees['phi2'] == MPoly.coerce(character('chi2').degree)
    expected = character('chi5').degree
    for label in ('chi1', 'chi2', 'chi3', 'chi4'):
        expected = expected - character(label).degree
    assert degrees['phi5'] == MPoly.coerce(expected)
    assert degrees['phi18'].variables


def test_blocks_partition_columns():
    m = decomposition_matrix(PrimeCase.PHI8P)
    grouped = blocks(m)
    assert sorted(c for b in grouped for c in b) == sorted(m.columns)
    assert ['phi6'] in grouped


def test_principal_series_matches_hecke():
    for case, (n, ell) in REPRESENTATIVES.items():
        m = decomposition_matrix(case)
        rows, columns, block = principal_series_block(m)
        assert rows[0] == 'chi1' and rows[-1] == 'chi21'
        assert block.shape == (7, len(columns))
        assert not dipper_embedding_diff(m, hecke_decomposition(n, ell)), f'{case}'

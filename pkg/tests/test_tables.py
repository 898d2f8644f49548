import pytest

from reedecomp.algebra.parse import CountExpr
from reedecomp.algebra.qpoly import Q, QPoly
from reedecomp.algebra.qs2 import R2
from reedecomp.errors import DataError
from reedecomp.tables.loader import (
    DecompositionTable,
    ScalarTable,
    decomposition_table,
    find_tables,
    load_table,
    nonunipotent_table,
    relation_table,
    scalar_tables,
    star_name,
    validate_tables,
    verify_manifest,
)
from reedecomp.tables.parsing import parse_table_text
from reedecomp.tables.relations import MINIMAL_L, Condition, always_exists, l_power, relation_exists
from reedecomp.types import TABULATED_CASES, PrimeCase


def test_parse_table_text():
    text = '\n'.join(
        [
            '@id: X.1',
            '@kind: decomposition',
            '@columns: phi1 phi2',
            '@series: ps c',
            '# comment',
            'chi1  1 .',
            'chi2  a 1  | (L-1)/2',
        ]
    )
    raw = parse_table_text(text, 'X1')
    assert raw.table_id == 'X.1'
    assert raw.columns() == ['phi1', 'phi2']
    assert raw.rows[1].cells == ['a', '1']
    assert raw.rows[1].tail == '(L-1)/2'
    assert raw.rows[1].line == 7


def test_parse_table_text_errors():
    with pytest.raises(DataError):
        parse_table_text('@kind: unknown\n', 'bad')
    with pytest.raises(DataError) as e:
        parse_table_text('@kind: hecke\n@columns: a b\nx 1 . .\n', 'bad')
    assert e.value.line == 3
    with pytest.raises(DataError):
        parse_table_text('@kind hecke\n', 'bad')


def test_unipotent_tables():
    for case in TABULATED_CASES:
        table = decomposition_table(case)
        assert isinstance(table, DecompositionTable)
        assert table.columns[0] == 'phi1'
        assert len(table.basic_set) == len(table.columns), f'{case}'
        assert table.basic_set[:3] == ('chi1', 'chi2', 'chi3'), f'{case}'
    c3 = load_table('C.3')
    assert c3 is decomposition_table(PrimeCase.PHI8P)
    assert len(c3.columns) == 21
    assert set(decomposition_table(PrimeCase.PHI8P).unknowns()) >= set('abcdeghijrstuvwx')


def test_star_cells_become_named_unknowns():
    c3 = decomposition_table(PrimeCase.PHI8P)
    entry = c3.entries[('chi10_a', 'phi9')]
    assert entry.single_unknown() == star_name('C.3', 'chi10_a', 'phi9') == 'st_C3_chi10_a_phi9'
    assert entry.has_star()
    assert star_name('5.2', 'chi19', "Psi13'") == 'st_52_chi19_Psi13p'


def test_counts_are_parsed():
    c3 = decomposition_table(PrimeCase.PHI8P)
    assert c3.counts['chi14_1'] == CountExpr('(L-1)*(L-5)/96')
    assert 'chi21' not in c3.counts


def test_scalar_tables():
    tables = scalar_tables(PrimeCase.PHI8P)
    assert all(isinstance(t, ScalarTable) for t in tables)
    t52 = load_table('5.2', PrimeCase.PHI8P)
    column = t52.column("Psi13'")
    assert column['chi19'] == (Q**2 + QPoly([0, R2])) / 4
    assert 'chi14' not in column


def test_relation_tables():
    for case in TABULATED_CASES:
        relations = relation_table(case)
        assert relations is not None, f'{case}'
        for row in relations.rows:
            assert len(row.coefficients) == len(relations.basic_set)


def test_nonunipotent_tables():
    d3 = nonunipotent_table('g5', PrimeCase.PHI4)
    assert d3 is not None
    assert d3.unknowns() == ['ap']
    assert nonunipotent_table('g5', PrimeCase.ELL3) is None
    assert find_tables('hecke', PrimeCase.PHI8P)


def test_manifest():
    status = verify_manifest()
    assert status and all(status.values()), [k for k, v in status.items() if not v]
    summary = validate_tables()
    assert {s['table'] for s in summary} >= {'C1', 'C2', 'C3', 'C4', 'C5', 'T52', 'T53', 'G5'}


def test_conditions():
    condition = Condition('ell!=5;n%20=7,12')
    assert condition.holds(1, 13)
    assert not condition.holds(1, 5)
    assert condition.holds(7, 5)
    with pytest.raises(ValueError):
        Condition('l>5').clauses()


def test_relation_existence():
    count = CountExpr('(L-1)*(L-5)/96')
    # l = 5 with f = 1 leaves no character of the family
    assert l_power(1, 5) == 5
    assert not relation_exists(count, 1, 5)
    assert relation_exists(count, 1, 13)
    assert not always_exists(count, PrimeCase.PHI8P)
    assert always_exists(CountExpr('(L-1)/4'), PrimeCase.PHI8P)
    assert always_exists(CountExpr('1'), PrimeCase.LINEAR)
    assert MINIMAL_L[PrimeCase.ELL3] == 3

import numpy as np
import pytest

from reedecomp.cli.main import HECKE_CHECKS
from reedecomp.hecke.decomposition import (
    NEW_PREFIX,
    compare_with_reference,
    composition_factors,
    hecke_decomposition,
    rank_mod,
    verified_hecke_decomposition,
)
from reedecomp.hecke.representations import REP_NAMES, all_reps, build_rep, check_relations, fitting_labels
from reedecomp.types import PrimeCase


def test_relations_hold():
    reps = all_reps()
    assert [r.name for r in reps] == list(REP_NAMES)
    for rep in reps:
        assert check_relations(rep), f'relations fail for {rep.name}'
    assert sum(r.dim**2 for r in reps) == 16


def test_fitting_labels():
    labels = fitting_labels()
    assert list(labels) == list(REP_NAMES)
    assert labels['ind'] == 'chi1'
    assert labels['S0'] == 'chi7'
    assert labels['sgn'] == 'chi21'
    labels['ind'] = 'x'
    assert fitting_labels()['ind'] == 'chi1'


def test_unknown_rep():
    with pytest.raises(ValueError):
        build_rep('S2')


def test_rank_mod():
    assert rank_mod(np.array([[1, 2], [2, 4]]), 7) == 1
    assert rank_mod(np.array([[1, 2], [3, 4]]), 7) == 2
    assert rank_mod(np.array([[1, 2], [3, 4]]), 2) == 1


def test_composition_factors_phi8p():
    # q^2 = 8, p_b = 64 = -1 mod 13
    assert composition_factors(build_rep('sgn'), 1, 13) == [(12, 12)]
    assert composition_factors(build_rep('S1'), 1, 13) == [(8, 12), (12, 12)]
    assert composition_factors(build_rep('S0'), 1, 13) is None


def test_linear_prime_keeps_two_dimensional_reps():
    computed = hecke_decomposition(1, 7)
    assert computed.case == PrimeCase.LINEAR
    assert np.array_equal(computed.matrix, np.eye(7, dtype=np.int64))
    assert sum(c.startswith(NEW_PREFIX) for c in computed.columns) == 3


def test_phi8p_block():
    computed = hecke_decomposition(1, 13)
    assert computed.columns == ('ind', 'sigma1', 'new-d2-S-1', 'new-d2-S0')
    assert computed.row('S1') == {'ind': 1, 'sigma1': 1, 'new-d2-S-1': 0, 'new-d2-S0': 0}
    assert computed.row('sgn')['sigma1'] == 1


def test_matches_printed_blocks():
    for n, ell in HECKE_CHECKS:
        computed = hecke_decomposition(n, ell)
        diff = compare_with_reference(computed)
        assert not diff, f'n={n} l={ell}: {diff}'


def test_ell3_uses_phi4_block():
    computed = verified_hecke_decomposition(1, 3)
    assert computed.case == PrimeCase.ELL3
    assert computed.columns == ('ind', 'new-d2-S1', 'new-d2-S-1', 'sigma2')


def test_cyclic_prime_is_rejected():
    with pytest.raises(ValueError):
        hecke_decomposition(1, 19)
    with pytest.raises(ValueError):
        hecke_decomposition(1, 11)


def test_reference_diff_names_rows():
    computed = hecke_decomposition(1, 13)
    tampered = computed.matrix.copy()
    tampered[2, 0] = 0
    broken = type(computed)(computed.case, computed.rows, computed.columns, tampered)
    diff = compare_with_reference(broken)
    assert diff and diff[0].startswith('row S1')

import json
from fractions import Fraction

import numpy as np

from reedecomp.algebra.qs2 import R2
from reedecomp.utils import ExactEncoder, catch_all_and_log, default


@catch_all_and_log
def fn_1(value):
    return value + 1


@catch_all_and_log
def fn_2(value):
    raise ZeroDivisionError('division by the zero multiplicity')


def test_catch_all_and_log_without_exception():
    r = fn_1(42)
    assert r == 43


def test_catch_all_and_log_with_exception():
    r = fn_2(42)
    assert r is None


def test_default(monkeypatch):
    monkeypatch.delenv('REEDECOMP_TEST_VALUE', raising=False)
    assert default('REEDECOMP_TEST_VALUE', '7', int) == 7
    assert default('REEDECOMP_TEST_VALUE', None) is None
    monkeypatch.setenv('REEDECOMP_TEST_VALUE', '11')
    assert default('REEDECOMP_TEST_VALUE', '7', int) == 11


def test_exact_encoder():
    payload = {'half': Fraction(1, 2), 'two': Fraction(2), 'r2': R2, 'm': np.eye(2, dtype=np.int64), 'k': np.int64(3)}
    text = json.dumps(payload, cls=ExactEncoder, sort_keys=True)
    assert json.loads(text) == {'half': '1/2', 'two': 2, 'r2': str(R2), 'm': [[1, 0], [0, 1]], 'k': 3}

import json

import pytest

from reedecomp.cli.main import build_parser, main, selfcheck_probes
from reedecomp.cli.reports import Section, cell, render_csv, render_text
from reedecomp.errors import InconsistentBoundsError


def test_classify(capsys):
    assert main(['classify', '--n', '1', '--ell', '13']) == 0
    out = capsys.readouterr().out
    assert 'Phi8p f=1' in out
    assert 'defect zero unipotent characters:' in out


def test_order(capsys):
    assert main(['order', '--n', '0']) == 0
    assert '35942400' in capsys.readouterr().out


def test_json_is_deterministic(capsys):
    outputs = []
    for _ in range(2):
        assert main(['pins', '--n', '1', '--ell', '13', '--format', 'json']) == 0
        outputs.append(capsys.readouterr().out)
    assert outputs[0] == outputs[1]
    assert json.loads(outputs[0]) == {'pins at n=1 l=13': {'h': 1, 'j': 1, 'x': 2}}


def test_csv_hecke(capsys):
    assert main(['hecke', '--n', '1', '--ell', '7', '--format', 'csv']) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == 'representation,ind,sigma1,new-d2-S1,new-d2-S-1,new-d2-S0,sigma2,sgn'
    assert lines[1] == 'ind,1,0,0,0,0,0,0'


def test_markdown_to_file(tmp_path, capsys):
    out = tmp_path / 'reports' / 'pins.md'
    assert main(['pins', '--case', 'phi8m', '--n', '1', '--ell', '5', '--format', 'markdown', '--out', str(out)]) == 0
    assert capsys.readouterr().out == ''
    text = out.read_text()
    assert 'pins at n=1 l=5' in text
    assert 'printed pins: agree' in text


def test_usage_errors(capsys):
    assert main(['classify', '--n', '1', '--ell', '9']) == 2
    assert main(['pins', '--n', '1', '--ell', '11']) == 2
    assert main(['pins', '--case', 'phi8p', '--n', '1', '--ell', '7']) == 2
    with pytest.raises(SystemExit) as e:
        main(['matrix', '--case', 'cyclic'])
    assert e.value.code == 2
    capsys.readouterr()


def test_malformed_data(tmp_path, monkeypatch, capsys):
    monkeypatch.setenv('REEDECOMP_TABLES_ROOT', str(tmp_path))
    assert main(['validate-tables']) == 3
    assert 'data error' in capsys.readouterr().err


def test_empty_interval_exit_code(monkeypatch, capsys):
    def empty(case, n, ell, bs=None):
        raise InconsistentBoundsError('x', 3, 2)

    monkeypatch.setattr('reedecomp.cli.main.corollary_pins', empty)
    assert main(['pins', '--n', '1', '--ell', '13']) == 1
    assert 'empty bound interval for x' in capsys.readouterr().err


def test_parser_requires_command():
    with pytest.raises(SystemExit):
        build_parser().parse_args([])


def test_selfcheck_probes_are_named():
    names = [name for name, _ in selfcheck_probes(2)]
    assert len(names) == len(set(names))
    assert 'Phi8p pins' in names and 'hecke n=3 l=127' in names
    assert 'Phi8m smallest degree n=2 l=5' in names and 'Phi8m smallest degree n=3 l=113' in names


def test_render_text():
    section = Section('pins', ('unknown', 'value'), [['h', 1], ['x', None]], lines=['n=1'])
    assert render_text([section]).splitlines() == ['== pins ==', 'n=1', 'unknown  value', 'h        1', 'x        .']
    assert render_csv([section, Section('empty', lines=['nothing'])]).splitlines()[0] == '# pins'
    assert cell(True) == 'yes'

# -*- coding: utf-8 -*-

import json
import os

import pytest

from src.api.config import OPTIONS
from src.api.constants import EXITCODE
from src.librc import rc

PATH = os.path.realpath(os.path.dirname(os.path.abspath(__file__)))


@pytest.fixture
def file_point():
    return os.path.join(PATH, 'point.json')


def test_solve(file_point, capsys):
    assert rc.main(['solve', '--instance', file_point, '--model', 'cut']) == EXITCODE.ok
    out = capsys.readouterr().out
    assert 'point [cut-h0-s0-p0]: optimal rc=2' in out
    assert 'verified=yes' in out
    relaxation = [line for line in out.splitlines() if line.startswith('  ')]
    assert len(relaxation) == 2
    assert all('*x1 <= ' in line for line in relaxation)


def test_solve_with_enhancements(file_point, capsys):
    args = ['solve', '--instance', file_point, '--model', 'colgen', '--pricing-hiding', '--sym', 'a', '--prop', '1']
    assert rc.main(args) == EXITCODE.ok
    assert 'point [colgen-h1-sa-p1]: optimal rc=2' in capsys.readouterr().out


def test_solve_sets_options(file_point):
    rc.main(['solve', '--instance', file_point, '--eps', '1/10', '--time-limit', '60'])
    assert OPTIONS.time_limit == 60
    assert str(OPTIONS.eps) == '1/10'


def test_pricing_hiding_needs_colgen(file_point, capsys):
    assert rc.main(['solve', '--instance', file_point, '--pricing-hiding']) == EXITCODE.bad_input
    assert 'colgen or hybrid' in capsys.readouterr().err


def test_missing_instance(capsys):
    assert rc.main(['solve', '--instance', os.path.join(PATH, 'missing.json')]) == EXITCODE.bad_input


def test_limit_without_bounds(file_point):
    assert rc.main(['solve', '--instance', file_point, '--node-limit', '0']) == EXITCODE.limit_without_bounds


def test_bad_flags(file_point):
    with pytest.raises(SystemExit):
        rc.main(['solve', '--instance', file_point, '--sym', 'x'])
    with pytest.raises(SystemExit):
        rc.main(['solve', '--instance', file_point, '--hiding', '2'])
    with pytest.raises(SystemExit):
        rc.main(['solve', '--instance', file_point, '--eps', '-1'])


def test_gen_and_solve(tmp_path, capsys):
    fname = str(tmp_path / 'segment.json')
    assert rc.main(['gen', 'simplex', '--dim', '1', '-o', fname]) == EXITCODE.ok
    with open(fname) as f:
        data = json.load(f)
    assert data['name'] == 'simplex-d1-r1'
    assert data['X'] == [[0], [1]]
    assert data['Y'] == {'l1_radius': 1}
    assert rc.main(['solve', '--instance', fname]) == EXITCODE.ok
    assert 'optimal rc=2' in capsys.readouterr().out


def test_gen_downcld(capsys):
    assert rc.main(['gen', 'downcld', '--set', '1', '2', '--set', '3']) == EXITCODE.ok
    data = json.loads(capsys.readouterr().out)
    assert len(data['X']) == 5
    assert rc.main(['gen', 'downcld', '--set', '1', '--set', '1', '2']) == EXITCODE.bad_input


def test_gen_sbox(tmp_path, capsys):
    sbox = str(tmp_path / 'tiny.sbox')
    assert rc.main(['gen', 'sbox', '--table', '1,0', '-o', sbox]) == EXITCODE.ok
    assert rc.main(['gen', 'sbox', '--file', sbox]) == EXITCODE.ok
    data = json.loads(capsys.readouterr().out)
    assert data['X'] == [[0, 1], [1, 0]]
    assert data['Y'] == 'binary_complement'
    assert rc.main(['gen', 'sbox']) == EXITCODE.bad_input
    assert rc.main(['gen', 'cube']) == EXITCODE.bad_input


def test_agg(file_point, tmp_path, capsys):
    out = str(tmp_path)
    assert rc.main(['solve', '--instance', file_point, '--out', out]) == EXITCODE.ok
    assert rc.main(['solve', '--instance', file_point, '--model', 'cut', '--out', out]) == EXITCODE.ok
    capsys.readouterr()

    csv = str(tmp_path / 'agg.csv')
    assert rc.main(['agg', '--in', out, '--csv', csv]) == EXITCODE.ok
    lines = capsys.readouterr().out.strip().split('\n')
    assert len(lines) == 3
    assert lines[1].split()[:3] == ['compact-h0-s0-p0', 'line', '1']
    assert os.path.isfile(csv)


def test_agg_empty_directory(tmp_path):
    assert rc.main(['agg', '--in', str(tmp_path)]) == EXITCODE.bad_input

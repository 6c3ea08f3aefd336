# author: binopy contributors
# date: 2026-10-19
# version: 0.1.0

import json
import os

import pytest

from binopy import cli
from binopy.errors import VerificationError


def run(capsys, *argv):
    status = cli.main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return status, out, err


class TestCoeff:

    def test_value(self, capsys):
        assert run(capsys, 'coeff', '101001', '101')[:2] == (0, '6\n')

    def test_residue(self, capsys):
        assert run(capsys, 'coeff', '11', '1', '--p', 2)[1] == '2 0\n'

    def test_longer_v(self, capsys):
        assert run(capsys, 'coeff', '1', '11')[1] == '0\n'

    def test_empty_word(self, capsys):
        assert run(capsys, 'coeff', '101', 'ε')[1] == '1\n'

    def test_non_binary(self, capsys):
        status, out, err = run(capsys, 'coeff', '12', '1')
        assert status == 2
        assert out == ''
        assert err.startswith('binopy: error:')
        assert err.count('\n') == 1


class TestTriangle:

    def test_count(self, capsys):
        assert run(capsys, 'triangle', '--n', 3)[1] == '22\n'
        assert run(capsys, 'triangle', '--n', 0)[1] == '1\n'

    def test_cap(self, capsys):
        assert run(capsys, 'triangle', '--n', 13)[0] == 2
        assert run(capsys, '--depth-cap', 2, 'triangle', '--n', 3)[0] == 2

    def test_pbm_artifact(self, capsys, tmp_path, datadir):
        path = tmp_path / 'u72.pbm'
        assert run(capsys, 'triangle', '--n', 7, '--p', 3, '--r', 2, '--out', path)[:2] == (0, '482\n')
        with open(os.path.join(datadir, 'U_7_3_2.pbm'), 'rb') as f:
            assert path.read_bytes() == f.read()

    def test_json_artifact(self, capsys, tmp_path):
        path = tmp_path / 't3.json'
        run(capsys, 'triangle', '--n', 3, '--format', 'json', '--out', path)
        assert len(json.loads(path.read_text())['anchors']) == 22

    def test_bad_residue(self, capsys):
        assert run(capsys, 'triangle', '--n', 3, '--p', 3, '--r', 3)[0] == 2


class TestStars:

    def test_counts(self, capsys):
        assert run(capsys, 'stars', '--max-len', 8)[1] == '1369\n'
        assert run(capsys, 'stars', '--max-len', 8, '--include-empty')[1] == '1370\n'
        assert run(capsys, 'stars', '--max-len', 1)[1] == '1\n'
        assert run(capsys, 'stars', '--max-len', 0)[1] == '0\n'

    def test_help_names_include_empty(self, capsys):
        with pytest.raises(SystemExit) as info:
            cli.main(['stars', '--help'])
        assert info.value.code == 0
        out = capsys.readouterr().out
        assert '--include-empty' in out
        assert '1370' in out

    def test_cap(self, capsys):
        assert run(capsys, 'stars', '--max-len', 15)[0] == 2
        assert run(capsys, '--star-cap', 3, 'stars', '--max-len', 4)[0] == 2

    def test_csv(self, capsys, tmp_path):
        path = tmp_path / 'pairs.csv'
        run(capsys, 'stars', '--max-len', 2, '--format', 'csv', '--out', path)
        assert path.read_text() == 'u,v,p,r\n1,1,2,1\n10,10,2,1\n11,11,2,1\n'

    def test_verification_failure(self, capsys, monkeypatch):
        def broken(*args, **kwargs):
            raise VerificationError('extension fails')

        monkeypatch.setattr(cli, 'enumerate_star_pairs', broken)
        status, _, err = run(capsys, 'stars', '--max-len', 3)
        assert status == 1
        assert 'extension fails' in err


class TestFractal:

    def test_one_pair(self, capsys, tmp_path):
        svg, js = tmp_path / 'a1.svg', tmp_path / 'a1.json'
        assert run(capsys, 'fractal', '--max-len', 1, '--n', 1, '--out', svg, '--json', js)[:2] == (0, '3\n')
        assert svg.read_text().count('<line ') == 3
        assert json.loads(js.read_text())['n'] == 1

    def test_zoom(self, capsys, tmp_path):
        svg = tmp_path / 'zoom.svg'
        assert run(capsys, 'fractal', '--max-len', 10, '--n', 0, '--zoom', 'accumulation', '--out', svg)[0] == 0
        assert svg.read_text().count('<line ') >= 4

    def test_empty_A0(self, capsys):
        status, out, err = run(capsys, 'fractal', '--max-len', 0, '--n', 5)
        assert status == 2
        assert 'empty' in err


class TestConverge:

    def test_rows(self, capsys, tmp_path):
        path = tmp_path / 'converge.csv'
        status, out, _ = run(capsys, 'converge', 2, 3, '--max-len', 4, '--grid-exp', 6, '--approx-n', 2, '--out', path)
        assert status == 0
        lines = out.splitlines()
        assert [line.split()[:2] for line in lines] == [['2', '6'], ['3', '6']]
        assert path.read_text().splitlines()[0] == 'n,grid_exp,estimate,error_bound'

    def test_empty_range(self, capsys):
        assert run(capsys, 'converge', 9, 3)[0] == 2


class TestCounts:

    def test_rows(self, capsys, tmp_path):
        path = tmp_path / 'counts.csv'
        status, out, _ = run(capsys, 'counts', '--n-max', 4, '--out', path)
        assert out == '1 3 3\n2 8 9\n3 22 27\n4 62 81\n'
        assert path.read_text().splitlines() == ['n,squares,positive_pairs', '1,3,3', '2,8,9', '3,22,27', '4,62,81']


class TestUsage:

    def test_missing_argument(self):
        with pytest.raises(SystemExit) as info:
            cli.main(['triangle'])
        assert info.value.code == 2

    def test_negative_depth(self):
        with pytest.raises(SystemExit):
            cli.main(['triangle', '--n', '-1'])

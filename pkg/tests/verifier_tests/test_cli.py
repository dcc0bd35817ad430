"""
Tests for the command-line entry point
"""

import json
import math

import pytest

from main import main
from verifier.report_log import FAIL, CheckReport


def _stdout_json(capsys):
    return json.loads(capsys.readouterr().out)


def test_no_command(capsys):
    assert main([]) == 2
    assert 'specify a command' in capsys.readouterr().err


def test_bad_arguments_exit_with_usage():
    with pytest.raises(SystemExit) as exc:
        main(['gen', 'no_such_kind'])
    assert exc.value.code == 2


def test_gen_is_deterministic(capsys):
    assert main(['gen', 'random_set', '--n', '64', '--m', '8', '--seed', '1']) == 0
    first = _stdout_json(capsys)
    main(['gen', 'random_set', '--n', '64', '--m', '8', '--seed', '1'])
    assert _stdout_json(capsys) == first
    assert first['group'] == [64]
    assert len(first['set']) == 8


def test_gen_structured_instances(capsys):
    main(['gen', 'heilbronn', '--p', '5'])
    assert _stdout_json(capsys) == {'group': [25], 'set': [1, 7, 18, 24]}
    main(['gen', 'convex', '--shape', 'squares', '--n', '5'])
    assert _stdout_json(capsys)['set'] == [1, 4, 9, 16, 25]


def test_gen_to_file(tmp_path, capsys):
    path = tmp_path / 'A.json'
    assert main(['gen', 'subgroup', '--p', '13', '--t', '4', '--out', str(path)]) == 0
    assert capsys.readouterr().out == ''
    assert json.loads(path.read_text())['set'] == [1, 5, 8, 12]


def test_compute_inline_energy(capsys):
    assert main(['compute', '--group', '8', '--elements', '0,1,2']) == 0
    assert _stdout_json(capsys) == {'kind': 'E_k(2)', 'value': 19}
    main(['compute', '--group', '8', '--elements', '0,1,2', '--kind', 'energy-kl', '--k', '3', '--l', '2'])
    assert _stdout_json(capsys)['value'] == 45


def test_compute_from_set_file(tmp_path, capsys):
    path = tmp_path / 'gamma.json'
    path.write_text(json.dumps({'group': [25], 'set': [1, 7, 18, 24]}))
    assert main(['compute', '--set', str(path), '--kind', 'energy', '--k', '3']) == 0
    assert _stdout_json(capsys)['value'] == 100


def test_compute_magnification(capsys):
    main(['compute', '--group', '5', '--elements', '0,1', '--kind', 'magnification'])
    doc = _stdout_json(capsys)
    assert doc['ratio'] == '3/2'
    assert doc['witness']['set'] == [0, 1]


def test_compute_heilbronn_sum(capsys):
    assert main(['compute', '--kind', 'heilbronn-sum', '--p', '5']) == 0
    doc = _stdout_json(capsys)
    expected = 1 + 2 * math.cos(2 * math.pi / 25) + 2 * math.cos(14 * math.pi / 25)
    assert doc['value'][0] == pytest.approx(expected)


def test_compute_errors(capsys):
    assert main(['compute', '--kind', 'heilbronn-sum']) == 2
    assert main(['compute', '--kind', 'energy']) == 2
    assert main(['compute', '--group', str(2 ** 21), '--elements', '0']) == 3
    assert main(['compute', '--group', '8', '--elements', '1', '--kind', 'mult-energy']) == 2
    assert 'Error:' in capsys.readouterr().err


def test_spectrum(capsys):
    assert main(['spectrum', '--group', '8', '--elements', '0,1,2']) == 0
    values = _stdout_json(capsys)['eigenvalues']
    assert values == pytest.approx([(7 + math.sqrt(33)) / 2, 2.0, (7 - math.sqrt(33)) / 2])
    main(['spectrum', '--group', '8', '--elements', '0,1,2', '--weight', 'diff'])
    assert _stdout_json(capsys)['eigenvalues'] == pytest.approx([3.0, 0.0, 0.0], abs=1e-9)
    assert main(['spectrum', '--group', '8', '--elements', '0,1', '--weight', 'bogus']) == 2


def test_spectrum_dft_weight(tmp_path, capsys):
    path = tmp_path / 'S.json'
    path.write_text(json.dumps({'group': [8], 'set': [0, 1, 2]}))
    assert main(['spectrum', '--group', '8', '--elements', '0,3', '--weight', 'dft-of', str(path)]) == 0
    assert len(_stdout_json(capsys)['eigenvalues']) == 2


def test_verify_streams_reports(capsys):
    assert main(['verify', '--filter', 'ap_energy', '--trials', '2', '--seed', '1']) == 0
    captured = capsys.readouterr()
    records = [json.loads(line) for line in captured.out.splitlines()]
    assert [r['check'] for r in records] == ['ap_energy', 'ap_energy']
    assert all(r['verdict'] == 'pass' and 'elapsed_ms' not in r for r in records)
    assert 'ap_energy' in captured.err


def test_verify_with_timings_to_file(tmp_path, capsys):
    path = tmp_path / 'reports.jsonl'
    assert main(['verify', '--filter', 'ap_energy', '--trials', '1', '--timings', '--out', str(path)]) == 0
    assert 'ap_energy' in capsys.readouterr().out
    record = json.loads(path.read_text().splitlines()[0])
    assert 'elapsed_ms' in record


def test_verify_list(capsys):
    assert main(['verify', '--list']) == 0
    out = capsys.readouterr().out
    assert 'heilbronn_e3' in out and 'ruzsa_triangle' in out


def test_report(tmp_path, capsys):
    path = tmp_path / 'reports.jsonl'
    failing = CheckReport('ap_energy', 'E({0..n-1})', 1, 19, 44, 19 / 44, FAIL)
    path.write_text(json.dumps(failing.to_json()) + '\n')
    assert main(['report', str(path)]) == 1
    assert '1 reports, 1 failures' in capsys.readouterr().out
    assert main(['report', str(tmp_path / 'missing.jsonl')]) == 2

# convexpoly - exact convex polygon and convex sequence toolkit

import io
import json
import logging

import pytest

from convexpoly import cli
from convexpoly.geometry.polygon import PolygonVerdict, VerdictKind
from convexpoly.verification import fuzz


def _golden(data_path, name):
    with open(data_path(name), encoding='utf-8') as f:
        return f.read()


def test_classify_triangle_golden(data_path, capsys):
    assert cli.main(['classify', data_path('triangle.csv')]) == 0
    assert capsys.readouterr().out == _golden(data_path, 'classify_triangle.json')


def test_classify_not_convex_golden(data_path, capsys):
    assert cli.main(['classify', data_path('not_convex.json')]) == 0
    assert capsys.readouterr().out == _golden(data_path, 'classify_not_convex.json')


def test_classify_two_points(data_path, capsys):
    assert cli.main(['classify', data_path('two_points.csv')]) == 2
    captured = capsys.readouterr()
    assert captured.out == ''
    assert 'n must be at least 3' in captured.err


def test_classify_is_deterministic(data_path, capsys):
    outputs = []
    for _ in range(2):
        cli.main(['classify', data_path('not_convex.json')])
        outputs.append(capsys.readouterr().out)
    assert outputs[0] == outputs[1]


def test_classify_output_file(data_path, tmp_path, capsys):
    out = tmp_path / 'verdict.json'
    assert cli.main(['classify', data_path('triangle.csv'), '--output', str(out)]) == 0
    assert capsys.readouterr().out == ''
    assert out.read_text() == _golden(data_path, 'classify_triangle.json')


def test_classify_oracle(data_path, capsys):
    assert cli.main(['classify', data_path('not_convex.json'), '--oracle']) == 0
    result = json.loads(capsys.readouterr().out)
    assert result['agrees'] and result['hull_agrees']
    assert result['oracle']['kind'] == 'NotConvex'


def test_classify_relaxed(data_path, tmp_path, capsys):
    # The file declares relax_endpoints itself
    assert cli.main(['classify', data_path('relaxed.json')]) == 0
    result = json.loads(capsys.readouterr().out)
    assert result['kind'] == 'ConvexBelowChord'
    assert result['slopes'] == ['vertical', '1', '3']

    path = tmp_path / 'relaxed.csv'
    path.write_text('0,5\n0,0\n1,1\n2,4\n')
    assert cli.main(['classify', str(path)]) == 2
    capsys.readouterr()
    assert cli.main(['classify', str(path), '--relax-endpoints']) == 0


def test_classify_format_flag(data_path, tmp_path, capsys):
    path = tmp_path / 'points.txt'
    path.write_text('0,0\n2,2\n3,1\n')
    assert cli.main(['classify', str(path)]) == 2
    assert cli.main(['classify', str(path), '--format', 'csv']) == 0


def test_missing_file(tmp_path, capsys):
    assert cli.main(['classify', str(tmp_path / 'nope.csv')]) == 2
    assert 'ERROR' in capsys.readouterr().err


def test_usage_errors(capsys):
    assert cli.main([]) == 2
    assert cli.main(['frobnicate']) == 2
    assert cli.main(['verify', '--mode', 'nonsense']) == 2
    assert cli.main(['--help']) == 0


def test_sequence(data_path, capsys):
    assert cli.main(['sequence', data_path('convex.csv')]) == 0
    result = json.loads(capsys.readouterr().out)
    assert result['is_convex'] is True
    assert result['first_violation_index'] is None

    assert cli.main(['sequence', data_path('counterexample.csv')]) == 0
    result = json.loads(capsys.readouterr().out)
    assert result['is_convex'] is False
    assert result['first_violation_index'] == 2


def test_sequence_pivot_and_mean(data_path, capsys):
    assert cli.main(['sequence', data_path('pivot.json'), '--pivot', '--mean', 'arithmetic']) == 0
    result = json.loads(capsys.readouterr().out)
    assert result['pivot'] == 1
    assert result['mean'] == {'kind': 'arithmetic', 'min': '0', 'mean': '11/5', 'max': '5'}

    assert cli.main(['sequence', data_path('counterexample.csv'), '--pivot']) == 0
    assert json.loads(capsys.readouterr().out)['pivot'] is None

    # 0 is not a valid input for the harmonic mean
    assert cli.main(['sequence', data_path('pivot.json'), '--mean', 'harmonic']) == 2


def test_verify(capsys):
    argv = ['verify', '--seed', '42', '--instances', '1000', '--n-max', '8',
            '--coord-range', '20', '--quiet']
    assert cli.main(argv) == 0
    assert json.loads(capsys.readouterr().out) == {
        'instances': 1000, 'agreements': 1000, 'disagreements': 0, 'seed': 42}


def test_verify_hypothesis_mode(capsys):
    assert cli.main(['verify', '--mode', 'hypothesis:Thm15', '--instances', '500', '--quiet']) == 0
    assert json.loads(capsys.readouterr().out)['agreements'] == 500


@pytest.mark.parametrize('flags', [
    ['--instances', '0'],
    ['--n-min', '2'],
    ['--coord-range', '0'],
    ['--n-min', '9', '--n-max', '4'],
])
def test_verify_config_errors(flags, capsys):
    assert cli.main(['verify', '--quiet'] + flags) == 2
    captured = capsys.readouterr()
    assert captured.out == ''
    assert 'ERROR' in captured.err


def _broken_classify(p):
    return PolygonVerdict(VerdictKind.NOT_CONVEX, strict=False, witness=2)


def test_verify_disagreement_dump_replays(monkeypatch, tmp_path, capsys):
    monkeypatch.setattr(fuzz, 'classify', _broken_classify)
    monkeypatch.setattr(cli, 'classify', _broken_classify)
    dump = tmp_path / 'dump.json'
    argv = ['verify', '--mode', 'convex-only', '--instances', '10', '--quiet', '--dump', str(dump)]
    assert cli.main(argv) == 1
    summary = json.loads(capsys.readouterr().out)
    assert summary['disagreements'] == 10

    assert cli.main(['classify', str(dump), '--oracle']) == 1
    result = json.loads(capsys.readouterr().out)
    assert result['agrees'] is False
    assert result['kind'] == 'NotConvex'


def test_verify_dump_to_stderr(monkeypatch, capsys):
    monkeypatch.setattr(fuzz, 'classify', _broken_classify)
    assert cli.main(['verify', '--mode', 'convex-only', '--instances', '3', '--quiet']) == 1
    err = capsys.readouterr().err
    assert '"points"' in err and '"seed": 0' in err


def test_log_file(data_path, tmp_path, capsys):
    log = tmp_path / 'run.log'
    assert cli.main(['verify', '--instances', '5', '--log-file', str(log)]) == 0
    assert 'Verifying 5 instances' in log.read_text()


def test_plot(data_path, tmp_path, capsys):
    svg = tmp_path / 'triangle.svg'
    assert cli.main(['plot', data_path('triangle.csv'), '--svg', str(svg)]) == 0
    text = svg.read_text()
    assert text.count('id="polygon-edge-') == 3
    assert text.count('id="chord"') == 1

    again = tmp_path / 'again.svg'
    assert cli.main(['plot', data_path('triangle.csv'), '--svg', str(again)]) == 0
    assert again.read_text() == text


def test_plot_unwritable(data_path, tmp_path, capsys):
    target = tmp_path / 'missing' / 'out.svg'
    assert cli.main(['plot', data_path('triangle.csv'), '--svg', str(target)]) == 2


def test_other_handlers_are_left_alone(data_path, capsys):
    logger = logging.getLogger('convexpolylog')
    buf = io.StringIO()
    foreign = logging.StreamHandler(buf)
    foreign.setLevel(logging.ERROR)
    null = logging.NullHandler()
    logger.addHandler(null)
    logger.addHandler(foreign)
    try:
        for _ in range(2):
            assert cli.main(['classify', data_path('triangle.csv'), '--verbose']) == 0
            assert capsys.readouterr().out == _golden(data_path, 'classify_triangle.json')
        assert foreign.stream is buf
        assert foreign.level == logging.ERROR
    finally:
        logger.removeHandler(null)
        logger.removeHandler(foreign)


def test_plot_svg_and_output_match(data_path, tmp_path, capsys):
    svg = tmp_path / 'a.svg'
    out = tmp_path / 'b.svg'
    assert cli.main(['plot', data_path('triangle.csv'), '--svg', str(svg)]) == 0
    assert cli.main(['plot', data_path('triangle.csv'), '--output', str(out)]) == 0
    assert svg.read_text() == out.read_text()


def test_relax_endpoints_only_for_point_commands(data_path, capsys):
    assert cli.main(['sequence', data_path('convex.csv'), '--relax-endpoints']) == 2
    assert cli.main(['plot', data_path('relaxed.json'), '--relax-endpoints']) == 0

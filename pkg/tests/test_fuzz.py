# convexpoly - exact convex polygon and convex sequence toolkit

import json

import pytest

from convexpoly import io
from convexpoly.exceptions import ConfigError
from convexpoly.geometry.polygon import PointSeq, PolygonVerdict, Theorem, VerdictKind
from convexpoly.verification import fuzz
from convexpoly.verification.fuzz import (
    FuzzConfig, check_instance, compare_verdicts, dump_instance, generate_instance,
    pretty_string_time, run_verification,
)


@pytest.mark.parametrize('kwargs', [
    dict(instances=0),
    dict(n_min=2),
    dict(n_min=5, n_max=4),
    dict(coord_range=0),
    dict(workers=0),
    dict(seed=-1),
    dict(mode='hypothesis:Thm99'),
    dict(mode='everything'),
    dict(coord_range=2, n_max=6),
])
def test_config_validation(kwargs):
    with pytest.raises(ConfigError):
        FuzzConfig(**kwargs).validate()


def test_config_theorem():
    assert FuzzConfig(mode='hypothesis:Thm17').theorem is Theorem.THM17
    assert FuzzConfig().theorem is None
    # Hypothesis modes do not need distinct lattice x values
    FuzzConfig(mode='hypothesis:Thm15', coord_range=1, n_max=12).validate()


def test_generation_is_deterministic():
    config = FuzzConfig(seed=3, instances=20)
    first = [generate_instance(config, k) for k in range(20)]
    assert first == [generate_instance(config, k) for k in range(20)]
    assert all(config.n_min <= len(p) <= config.n_max for p in first)


def test_run_verification():
    config = FuzzConfig(seed=42, instances=1000, n_max=8, coord_range=20)
    report = run_verification(config, progress=False)
    assert report.summary() == {'instances': 1000, 'agreements': 1000, 'disagreements': 0, 'seed': 42}
    assert report.ok
    assert report.first_disagreement is None


def test_run_verification_thm15():
    kinds = []
    config = FuzzConfig(seed=1, instances=500, mode='hypothesis:Thm15')
    report = run_verification(config, progress=False,
                              on_result=lambda r: kinds.append(r.verdict['kind']))
    assert report.ok
    assert len(kinds) == 500
    assert set(kinds) <= {'ConvexBelowChord', 'DegenerateCollinear'}


@pytest.mark.parametrize('mode', ['convex-only', 'relaxed', 'hypothesis:Thm16', 'hypothesis:Thm17',
                                  'hypothesis:Prop1', 'hypothesis:Prop2'])
def test_run_verification_modes(mode):
    report = run_verification(FuzzConfig(seed=5, instances=200, mode=mode), progress=False)
    assert report.ok, report.first_disagreement


def test_worker_layout_does_not_matter():
    results = {}
    for workers in (1, 2):
        seen = []
        config = FuzzConfig(seed=9, instances=60, n_max=6, workers=workers)
        report = run_verification(config, progress=False, on_result=lambda r: seen.append(r))
        results[workers] = (report.summary(), seen)
    assert results[1] == results[2]


def _broken_classify(p):
    return PolygonVerdict(VerdictKind.NOT_CONVEX, strict=False, witness=2)


def test_disagreements_are_reported(monkeypatch):
    monkeypatch.setattr(fuzz, 'classify', _broken_classify)
    config = FuzzConfig(seed=0, instances=30, mode='convex-only')
    report = run_verification(config, progress=False)
    assert report.disagreements == 30
    assert report.first_disagreement.index == 0
    assert 'kind' in report.first_disagreement.reasons
    assert report.reason_counts['kind'] == 30


def test_dump_is_replayable(monkeypatch, tmp_path):
    monkeypatch.setattr(fuzz, 'classify', _broken_classify)
    config = FuzzConfig(seed=0, instances=5, mode='convex-only')
    report = run_verification(config, progress=False)
    result = report.first_disagreement
    path = tmp_path / 'dump.json'
    path.write_text(io.dumps(dump_instance(result, config)))
    assert json.loads(path.read_text())['index'] == result.index

    replayed = io.read_points(str(path)).point_seq()
    assert replayed == generate_instance(config, result.index)
    _, _, reasons = compare_verdicts(replayed)
    assert reasons


def test_compare_verdicts_hypothesis_checks():
    config = FuzzConfig(mode='hypothesis:Thm16')
    p = generate_instance(config, 0)
    _, _, reasons = compare_verdicts(p, Theorem.THM16)
    assert reasons == []
    # The triangle is convex, but its coordinates violate the hypotheses
    triangle = PointSeq([(0, 0), (2, 2), (3, 1)])
    _, _, reasons = compare_verdicts(triangle, Theorem.THM15)
    assert reasons == ['hypotheses_not_satisfied', 'conclusion', 'slope_inequality']


def test_pretty_string_time():
    assert pretty_string_time(12.34) == 't=12.3s'
    assert pretty_string_time(600) == 't=10m'
    assert pretty_string_time(7200) == 't=2.0h'


@pytest.mark.slow
def test_acceptance_run():
    config = FuzzConfig(seed=42, instances=10000, n_min=3, n_max=12, coord_range=50)
    report = run_verification(config, progress=False)
    assert report.summary() == {'instances': 10000, 'agreements': 10000, 'disagreements': 0, 'seed': 42}


@pytest.mark.slow
def test_relaxed_acceptance_run():
    report = run_verification(FuzzConfig(seed=7, instances=1000, mode='relaxed'), progress=False)
    assert report.ok


def test_relaxed_dump_round_trip(tmp_path):
    config = FuzzConfig(seed=4, instances=3, mode='relaxed')
    result = check_instance(config, 2)
    path = tmp_path / 'relaxed.json'
    path.write_text(io.dumps(dump_instance(result, config)))
    instance = io.read_points(str(path))
    assert instance.relax_endpoints
    assert instance.point_seq() == generate_instance(config, 2)

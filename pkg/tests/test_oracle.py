# convexpoly - exact convex polygon and convex sequence toolkit

import pytest
from hypothesis import given, settings, strategies as st

from convexpoly.exceptions import PreconditionViolated
from convexpoly.geometry.oracle import (
    Orientation, convex_hull, hull_cross_check, oracle_classify, orient, polygon_contains,
)
from convexpoly.geometry.polygon import Point, PointSeq, PolygonVerdict, VerdictKind, classify
from convexpoly.verification.generators import relaxed_point_seq
from convexpoly.verification.random import instance_rng

from strategies import point_seqs


def test_orient():
    assert orient((0, 0), (1, 0), (1, 1)) is Orientation.COUNTERCLOCKWISE
    assert orient((0, 0), (1, 1), (1, 0)) is Orientation.CLOCKWISE
    assert orient((0, 0), (1, 1), ('5/2', '5/2')) is Orientation.COLLINEAR



@given(point_seqs(min_size=3, max_size=3))
def test_orient_is_antisymmetric(p):
    a, b, c = p.points
    o = orient(a, b, c)
    assert orient(b, a, c).value == -o.value
    assert orient(a, c, b).value == -o.value
    assert orient(c, b, a).value == -o.value
    assert orient(b, c, a) is o


def test_convex_hull():
    points = [(0, 0), (2, 0), (2, 2), (0, 2), (1, 1), (1, 0), (2, 2)]
    assert convex_hull(points) == [Point.of(0, 0), Point.of(2, 0), Point.of(2, 2), Point.of(0, 2)]
    assert convex_hull([(1, 1), (0, 0), (2, 2)]) == [Point.of(0, 0), Point.of(2, 2)]
    assert convex_hull([(3, 3)]) == [Point.of(3, 3)]
    with pytest.raises(ValueError):
        convex_hull([])


@pytest.mark.parametrize('points, kind, strict', [
    ([(0, 0), (2, 2), (3, 1)], VerdictKind.CONVEX_ABOVE_CHORD, True),
    ([(0, 0), (1, -1), (3, 0)], VerdictKind.CONVEX_BELOW_CHORD, True),
    ([(0, 0), (1, -1), (2, -2), (3, 0)], VerdictKind.CONVEX_BELOW_CHORD, False),
    ([(0, 0), (1, 1), (2, 2)], VerdictKind.DEGENERATE_COLLINEAR, False),
])
def test_oracle_examples(points, kind, strict):
    verdict = oracle_classify(PointSeq(points))
    assert (verdict.kind, verdict.strict) == (kind, strict)


def test_oracle_not_convex():
    verdict = oracle_classify(PointSeq([(0, 0), (1, 2), (2, 1), (3, 3)]))
    assert verdict.kind is VerdictKind.NOT_CONVEX
    assert verdict.witness is not None


def test_hull_in_convex_position_but_not_convex():
    # All four points are hull vertices, but the x order is not the hull order
    p = PointSeq([(0, 0), (1, 1), (2, -1), (3, 0)])
    verdict = classify(p)
    assert verdict.kind is VerdictKind.NOT_CONVEX
    assert len(convex_hull(p.points)) == 4
    assert hull_cross_check(p, verdict)
    assert not hull_cross_check(p, PolygonVerdict(VerdictKind.CONVEX_BELOW_CHORD, strict=True))


def test_hull_cross_check_rejects_wrong_verdicts():
    triangle = PointSeq([(0, 0), (2, 2), (3, 1)])
    assert hull_cross_check(triangle, classify(triangle))
    assert not hull_cross_check(triangle, PolygonVerdict(VerdictKind.CONVEX_BELOW_CHORD, strict=True))
    assert not hull_cross_check(triangle, PolygonVerdict(VerdictKind.DEGENERATE_COLLINEAR, strict=False))
    weak = PointSeq([(0, 0), (1, -1), (2, -2), (3, 0)])
    assert hull_cross_check(weak, PolygonVerdict(VerdictKind.CONVEX_BELOW_CHORD, strict=False))
    assert not hull_cross_check(weak, PolygonVerdict(VerdictKind.CONVEX_BELOW_CHORD, strict=True))


@settings(max_examples=300)
@given(point_seqs())
def test_oracle_agrees_with_classify(p):
    verdict = classify(p)
    oracle = oracle_classify(p)
    assert (oracle.kind, oracle.strict) == (verdict.kind, verdict.strict)
    assert hull_cross_check(p, verdict)


@given(point_seqs(max_size=7, values=st.integers(min_value=-3, max_value=3)))
def test_oracle_agrees_on_small_grids(p):
    # Small coordinate ranges produce many collinear triples
    verdict = classify(p)
    oracle = oracle_classify(p)
    assert (oracle.kind, oracle.strict) == (verdict.kind, verdict.strict)
    assert hull_cross_check(p, verdict)


def test_oracle_agrees_on_relaxed_endpoints():
    for k in range(200):
        p = relaxed_point_seq(instance_rng(5, k), 3 + k % 8, 20)
        assert p.points[0].x == p.points[1].x
        verdict = classify(p)
        oracle = oracle_classify(p)
        assert (oracle.kind, oracle.strict) == (verdict.kind, verdict.strict), p
        assert hull_cross_check(p, verdict), p


def test_polygon_contains():
    triangle = PointSeq([(0, 0), (2, 2), (3, 1)])
    assert polygon_contains(triangle, (2, 1))
    assert polygon_contains(triangle, (0, 0))
    assert not polygon_contains(triangle, (1, '1/4'))
    segment = PointSeq([(0, 0), (1, 1), (2, 2)])
    assert polygon_contains(segment, ('3/2', '3/2'))
    assert not polygon_contains(segment, (3, 3))
    with pytest.raises(PreconditionViolated):
        polygon_contains(PointSeq([(0, 0), (1, 2), (2, 1), (3, 3)]), (1, 1))

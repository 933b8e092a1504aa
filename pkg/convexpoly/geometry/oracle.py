# convexpoly - exact convex polygon and convex sequence toolkit

"""Brute-force geometric ground truth for :py:func:`polygon.classify`.

Nothing in here looks at slopes. :py:func:`oracle_classify` walks the
closed vertex cycle ``P_1 ... P_n P_1`` and inspects the orientation sign
of every consecutive vertex triple; :py:func:`convex_hull` builds the strict
convex hull with Andrew's monotone chain, and :py:func:`hull_cross_check`
compares the two views. Both are exact (``Fraction`` arithmetic only).
"""

import enum
import logging
from typing import Iterable, List, Sequence

from convexpoly.exceptions import OracleInconsistency, PreconditionViolated
from convexpoly.geometry.polygon import (
    Point, PointLike, PointSeq, PolygonVerdict, Side, VerdictKind, as_point, chord_side
)

logger = logging.getLogger('convexpolylog')


class Orientation(enum.Enum):
    CLOCKWISE = -1
    COLLINEAR = 0
    COUNTERCLOCKWISE = 1


def cross(a: Point, b: Point, c: Point):
    """``(b - a) x (c - a)``, positive for a counterclockwise turn."""
    return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x)


def orient(a: PointLike, b: PointLike, c: PointLike) -> Orientation:
    d = cross(as_point(a), as_point(b), as_point(c))
    return Orientation((d > 0) - (d < 0))


def cycle_turns(p: PointSeq) -> List[Orientation]:
    """Orientation of ``(P_{i-1}, P_i, P_{i+1})`` for every vertex of the
    closed cycle, indices taken modulo ``n`` (entry ``k`` is vertex ``k+1``)."""
    pts = p.points
    n = len(pts)
    return [orient(pts[k - 1], pts[k], pts[(k + 1) % n]) for k in range(n)]


def oracle_classify(p: PointSeq) -> PolygonVerdict:
    """Classify ``p`` from orientation signs of the closed vertex cycle.

    The cycle is convex iff its turns are all clockwise-or-collinear or all
    counterclockwise-or-collinear. The chord side of a convex cycle is read
    off its vertices that are not on the chord (they all have to agree).
    ``strict`` is ``True`` when no chain triple ``(P_{i-1}, P_i, P_{i+1})``,
    ``2 <= i <= n-1``, is collinear.

    Raises:
        OracleInconsistency: If the vertices of a convex cycle lie on both
            sides of the chord, or on the side opposite to what the cycle's
            orientation implies.
    """
    turns = cycle_turns(p)
    n = len(turns)
    strict = Orientation.COLLINEAR not in turns[1:n - 1]
    nonzero = [(k + 1, t) for k, t in enumerate(turns) if t is not Orientation.COLLINEAR]
    if not nonzero:
        return PolygonVerdict(VerdictKind.DEGENERATE_COLLINEAR, strict=False)
    reference = nonzero[0][1]
    for vertex, t in nonzero:
        if t is not reference:
            return PolygonVerdict(VerdictKind.NOT_CONVEX, strict=strict, witness=vertex)

    sides = {chord_side(q, p.first, p.last) for q in p.points[1:-1]} - {Side.ON}
    if len(sides) != 1:
        raise OracleInconsistency(
            f'Convex cycle {p} has vertices on chord sides {sorted(s.value for s in sides)}.')
    side = sides.pop()
    expected = Side.BELOW if reference is Orientation.COUNTERCLOCKWISE else Side.ABOVE
    if side is not expected:
        raise OracleInconsistency(
            f'{reference.name} cycle {p} lies {side.value} its chord.')
    kind = (VerdictKind.CONVEX_BELOW_CHORD if side is Side.BELOW
            else VerdictKind.CONVEX_ABOVE_CHORD)
    return PolygonVerdict(kind, strict=strict)


def convex_hull(points: Iterable[PointLike]) -> List[Point]:
    """Strict convex hull in counterclockwise order.

    Starts at the lexicographically smallest point. Points in the interior
    or on a hull edge are left out; duplicates are merged.
    """
    pts = sorted(set(as_point(p) for p in points))
    if not pts:
        raise ValueError('convex_hull() needs at least one point.')
    if len(pts) <= 2:
        return pts

    def half_hull(seq: Sequence[Point]) -> List[Point]:
        chain: List[Point] = []
        for q in seq:
            while len(chain) >= 2 and cross(chain[-2], chain[-1], q) <= 0:
                chain.pop()
            chain.append(q)
        return chain

    lower = half_hull(pts)
    upper = half_hull(pts[::-1])
    return lower[:-1] + upper[:-1]


def _cyclic_equal(a: Sequence[Point], b: Sequence[Point]) -> bool:
    if len(a) != len(b):
        return False
    if not a:
        return True
    try:
        start = list(a).index(b[0])
    except ValueError:
        return False
    rotated = list(a[start:]) + list(a[:start])
    return rotated == list(b)


def hull_cross_check(p: PointSeq, verdict: PolygonVerdict) -> bool:
    """Check ``verdict`` against the strict convex hull of ``p``.

    * Degenerate verdicts agree iff the hull has two vertices.
    * Convex verdicts agree iff the x-order cycle, with its zero-turn
      vertices removed, is the hull cycle: counterclockwise for below-chord,
      clockwise for above-chord polygons. For strict verdicts this means the
      hull consists of all ``n`` input points.
    * Not-convex verdicts agree iff the reduced cycle is not the hull cycle
      in either direction. Note that the hull may still contain all ``n``
      points (the x order need not be the hull order).
    """
    hull = convex_hull(p.points)
    if verdict.kind is VerdictKind.DEGENERATE_COLLINEAR:
        return len(hull) == 2
    if len(hull) == 2:
        return False
    turns = cycle_turns(p)
    reduced = [q for q, t in zip(p.points, turns) if t is not Orientation.COLLINEAR]
    ccw = _cyclic_equal(reduced, hull)
    cw = _cyclic_equal(reduced[::-1], hull)
    if verdict.kind is VerdictKind.CONVEX_BELOW_CHORD:
        agrees = ccw
    elif verdict.kind is VerdictKind.CONVEX_ABOVE_CHORD:
        agrees = cw
    else:
        agrees = not (ccw or cw)
    if agrees and verdict.kind.is_convex and verdict.strict:
        agrees = len(hull) == len(p)
    if not agrees:
        logger.debug(f'Hull {hull} disagrees with {verdict} for {p}')
    return agrees


def polygon_contains(p: PointSeq, q: PointLike) -> bool:
    """Point-in-convex-polygon test from orientation signs alone.

    Raises:
        PreconditionViolated: If the cycle of ``p`` is not convex.
    """
    q = as_point(q)
    verdict = oracle_classify(p)
    pts = p.points
    if verdict.kind is VerdictKind.NOT_CONVEX:
        raise PreconditionViolated(f'{p} is not a convex polygon.')
    if verdict.kind is VerdictKind.DEGENERATE_COLLINEAR:
        return (cross(p.first, p.last, q) == 0
                and p.first.x <= q.x <= p.last.x)
    s = 1 if verdict.kind is VerdictKind.CONVEX_BELOW_CHORD else -1
    n = len(pts)
    return all(s * cross(pts[k], pts[(k + 1) % n], q) >= 0 for k in range(n))

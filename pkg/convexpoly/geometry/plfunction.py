# convexpoly - exact convex polygon and convex sequence toolkit

"""Piecewise-linear interpolants of point lists.

A :py:class:`PLFunction` joins ``n - 1`` consecutive line segments between
breakpoints ``(x_1, y_1), ..., (x_n, y_n)`` with ``x_1 < ... < x_n``. On the
segment ``[x_i, x_{i+1}]`` it takes the value

    f(x) = t * y_i + (1 - t) * y_{i+1},   t = (x_{i+1} - x) / (x_{i+1} - x_i).

Such a function is convex exactly when its segment slopes are
nondecreasing. For the polygon of a below-chord :py:class:`PointSeq`, the
epigraph of its interpolant intersected with the half-plane below the
chord is the polygon itself (:py:func:`region_contains`).
"""

import enum
import logging
from bisect import bisect_left, bisect_right
from fractions import Fraction
from typing import Iterable, Tuple, Union

from convexpoly.exceptions import (
    EmptyInterval, InvalidPLFunction, OutOfDomain, PreconditionViolated
)
from convexpoly.geometry.polygon import (
    Point, PointLike, PointSeq, Side, VerdictKind, as_point, chord_side, classify
)
from convexpoly.scalar import ScalarLike, as_scalar

logger = logging.getLogger('convexpolylog')


class SegmentSide(enum.Enum):
    LEFT = 'left'
    RIGHT = 'right'


class PLFunction:
    """Piecewise-linear function on ``[x_1, x_n]``.

    Args:
        breakpoints: At least two points with strictly increasing x.

    Raises:
        InvalidPLFunction: If there are fewer than two breakpoints or the
            x values are not strictly increasing.
    """
    __slots__ = ('_points', '_xs')

    def __init__(self, breakpoints: Iterable[PointLike]):
        points = tuple(as_point(p) for p in breakpoints)
        if len(points) < 2:
            raise InvalidPLFunction(f'Need at least 2 breakpoints, got {len(points)}.')
        for i, (a, b) in enumerate(zip(points, points[1:]), start=1):
            if not a.x < b.x:
                raise InvalidPLFunction(
                    f'Breakpoint x values must be strictly increasing, but '
                    f'x_{i} = {a.x} >= x_{i + 1} = {b.x}.')
        self._points = points
        self._xs = tuple(p.x for p in points)

    @classmethod
    def from_point_seq(cls, p: PointSeq) -> 'PLFunction':
        """Interpolant of the chain ``P_1 ... P_n``.

        An end point that shares its x value with its neighbour (relaxed end
        points) only bounds the polygon through the chord, so it is left out.
        """
        points = list(p.points)
        if points[0].x == points[1].x:
            points = points[1:]
        if points[-1].x == points[-2].x:
            points = points[:-1]
        return cls(points)

    @property
    def breakpoints(self) -> Tuple[Point, ...]:
        return self._points

    @property
    def domain(self) -> Tuple[Fraction, Fraction]:
        return self._xs[0], self._xs[-1]

    def __len__(self) -> int:
        return len(self._points)

    def __repr__(self) -> str:
        return f'PLFunction([{", ".join(str(p) for p in self._points)}])'

    def __call__(self, x: ScalarLike) -> Fraction:
        return evaluate(self, x)

    def in_domain(self, x: Fraction) -> bool:
        return self._xs[0] <= x <= self._xs[-1]

    def _check_domain(self, x: Fraction) -> None:
        if not self.in_domain(x):
            lo, hi = self.domain
            raise OutOfDomain(f'x = {x} is outside the domain [{lo}, {hi}].')

    def segment_index(self, x: Fraction, side: SegmentSide = SegmentSide.RIGHT) -> int:
        """0-based index ``i`` of the segment ``[x_i, x_{i+1}]`` containing ``x``.

        At an interior breakpoint, ``side`` selects the segment to its left or
        right. At the domain ends, the only adjacent segment is returned.
        """
        self._check_domain(x)
        if side is SegmentSide.RIGHT:
            i = bisect_right(self._xs, x) - 1
        else:
            i = bisect_left(self._xs, x) - 1
        return min(max(i, 0), len(self._xs) - 2)

    def segment_slopes(self) -> Tuple[Fraction, ...]:
        return tuple((b.y - a.y) / (b.x - a.x)
                     for a, b in zip(self._points, self._points[1:]))

    def _scaled_value(self, i: int, x: Fraction) -> Tuple[Fraction, Fraction]:
        """``(w * f(x), w)`` on segment ``i`` with width ``w > 0``."""
        a, b = self._points[i], self._points[i + 1]
        w = b.x - a.x
        return (b.x - x) * a.y + (x - a.x) * b.y, w


def evaluate(f: PLFunction, x: ScalarLike) -> Fraction:
    """Value of ``f`` at ``x``.

    Raises:
        OutOfDomain: If ``x`` is outside ``[x_1, x_n]``.
    """
    x = as_scalar(x)
    i = f.segment_index(x)
    a, b = f.breakpoints[i], f.breakpoints[i + 1]
    t = (b.x - x) / (b.x - a.x)
    return t * a.y + (1 - t) * b.y


def is_convex_function(f: PLFunction) -> bool:
    """``True`` iff the segment slopes of ``f`` are nondecreasing."""
    pts = f.breakpoints
    for a, b, c in zip(pts, pts[1:], pts[2:]):
        # (b.y - a.y)/(b.x - a.x) <= (c.y - b.y)/(c.x - b.x), widths positive
        if (b.y - a.y) * (c.x - b.x) > (c.y - b.y) * (b.x - a.x):
            return False
    return True


def epigraph_contains(f: PLFunction, p: PointLike) -> bool:
    """``True`` iff ``p.x`` is in the domain of ``f`` and ``f(p.x) <= p.y``."""
    p = as_point(p)
    if not f.in_domain(p.x):
        return False
    scaled, w = f._scaled_value(f.segment_index(p.x), p.x)
    return scaled <= p.y * w


def hypograph_contains(f: PLFunction, p: PointLike) -> bool:
    """``True`` iff ``p.x`` is in the domain of ``f`` and ``p.y <= f(p.x)``."""
    p = as_point(p)
    if not f.in_domain(p.x):
        return False
    scaled, w = f._scaled_value(f.segment_index(p.x), p.x)
    return p.y * w <= scaled


def chord_slope(f: PLFunction, x1: ScalarLike, x2: ScalarLike) -> Fraction:
    """Slope ``(f(x2) - f(x1)) / (x2 - x1)`` of the chord of ``f`` over ``[x1, x2]``.

    Raises:
        EmptyInterval: If ``x1 >= x2``.
        OutOfDomain: If ``x1`` or ``x2`` is outside the domain of ``f``.
    """
    x1, x2 = as_scalar(x1), as_scalar(x2)
    if x1 >= x2:
        raise EmptyInterval(f'Need x1 < x2, got x1 = {x1}, x2 = {x2}.')
    return (evaluate(f, x2) - evaluate(f, x1)) / (x2 - x1)


def segment_slope(
        f: PLFunction,
        x: ScalarLike,
        side: Union[SegmentSide, str] = SegmentSide.RIGHT,
) -> Fraction:
    """Slope of the segment of ``f`` containing ``x`` (``side`` decides at
    interior breakpoints, which belong to two segments)."""
    i = f.segment_index(as_scalar(x), SegmentSide(side))
    a, b = f.breakpoints[i], f.breakpoints[i + 1]
    return (b.y - a.y) / (b.x - a.x)


def region_contains(p: PointSeq, q: PointLike) -> bool:
    """Membership of ``q`` in the polygon of ``p``, built from the interpolant.

    Below-chord polygons are ``epi(f)`` intersected with the closed
    half-plane below the chord ``P_1 P_n``; above-chord polygons are
    ``hypo(f)`` intersected with the closed half-plane above it. A collinear
    point sequence yields the segment ``P_1 P_n``.

    Raises:
        PreconditionViolated: If ``p`` is not convex.
    """
    q = as_point(q)
    kind = classify(p).kind
    if kind is VerdictKind.NOT_CONVEX:
        raise PreconditionViolated(f'{p} is not a convex polygon.')
    f = PLFunction.from_point_seq(p)
    side = chord_side(q, p.first, p.last)
    if kind is VerdictKind.CONVEX_ABOVE_CHORD:
        return side is not Side.BELOW and hypograph_contains(f, q)
    # below chord, or a degenerate polygon (the segment where both hold)
    return side is not Side.ABOVE and epigraph_contains(f, q)

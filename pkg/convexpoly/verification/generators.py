# convexpoly - exact convex polygon and convex sequence toolkit

"""Instance generators for the verification runs and the test suite.

Convex instances are built constructively, never by rejection sampling:
convex chains are lower hulls of random point clouds, and the sequences
for the hypothesis modes are prefix sums of sorted difference lists
(nondecreasing differences give convex sequences, nonincreasing ones
concave sequences).
"""

import enum
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

import numpy as np

from convexpoly.geometry.oracle import convex_hull
from convexpoly.geometry.polygon import Point, PointSeq, Theorem
from convexpoly.sequences import RealSeq
from convexpoly.verification.random import RandInt, distinct_ints


class Shape(enum.Enum):
    UNIFORM = 'uniform'
    CONVEX_BELOW = 'convex_below'
    CONVEX_ABOVE = 'convex_above'
    COLLINEAR = 'collinear'


# Probabilities of the instance shapes in mixed mode
MIXED_SHAPES = (Shape.UNIFORM, Shape.CONVEX_BELOW, Shape.CONVEX_ABOVE, Shape.COLLINEAR)
MIXED_WEIGHTS = (0.55, 0.2, 0.2, 0.05)


def prefix_sums(start: int, diffs: Sequence[int]) -> List[Fraction]:
    values = [Fraction(start)]
    for d in diffs:
        values.append(values[-1] + d)
    return values


def convex_sequence(rng: np.random.Generator, n: int, coord_range: int) -> RealSeq:
    """Random integer convex sequence (sorted differences, prefix-summed)."""
    start = RandInt(-coord_range, coord_range).one(rng)
    diffs = sorted(RandInt(-coord_range, coord_range).ints(rng, n - 1)) if n > 1 else []
    return RealSeq(prefix_sums(start, diffs))


def uniform_chain(rng: np.random.Generator, n: int, coord_range: int) -> List[Point]:
    """``n`` points with distinct, increasing integer x and uniform integer y."""
    xs = distinct_ints(rng, -coord_range, coord_range, n)
    ys = RandInt(-coord_range, coord_range).ints(rng, n)
    return [Point(Fraction(x), Fraction(y)) for x, y in zip(xs, ys)]


def convex_chain(
        rng: np.random.Generator,
        n: int,
        coord_range: int,
        weak_probability: float = 0.25,
) -> List[Point]:
    """Chain of ``n`` points with nondecreasing slopes.

    The lower hull of a random cloud with distinct x values gives a strictly
    convex chain; ``n`` of its vertices (always keeping both ends) are kept.
    If the hull is too short, edge midpoints are inserted, which creates
    collinear vertex triples; with probability ``weak_probability`` one
    hull vertex is replaced by such a midpoint even if the hull is long
    enough.
    """
    cloud_size = min(2 * coord_range + 1, max(4 * n, 8))
    cloud = uniform_chain(rng, cloud_size, coord_range)
    hull = convex_hull(cloud)
    # Counterclockwise from the leftmost point: the lower chain comes first
    rightmost = max(range(len(hull)), key=lambda k: (hull[k].x, -hull[k].y))
    lower = hull[:rightmost + 1]
    if len(lower) > n:
        keep = sorted(rng.choice(np.arange(1, len(lower) - 1), size=n - 2, replace=False))
        lower = [lower[0]] + [lower[int(k)] for k in keep] + [lower[-1]]
    if len(lower) == n and n > 3 and rng.random() < weak_probability:
        drop = int(rng.integers(1, n - 1))
        lower = lower[:drop] + lower[drop + 1:]
    while len(lower) < n:
        k = int(rng.integers(0, len(lower) - 1))
        a, b = lower[k], lower[k + 1]
        lower.insert(k + 1, Point((a.x + b.x) / 2, (a.y + b.y) / 2))
    return lower


def collinear_chain(rng: np.random.Generator, n: int, coord_range: int) -> List[Point]:
    xs = distinct_ints(rng, -coord_range, coord_range, n)
    num = RandInt(-coord_range, coord_range).one(rng)
    den = RandInt(1, coord_range).one(rng)
    slope = Fraction(num, den)
    y0 = Fraction(RandInt(-coord_range, coord_range).one(rng))
    return [Point(Fraction(x), y0 + slope * (x - xs[0])) for x in xs]


def mirrored(points: Sequence[Point]) -> List[Point]:
    return [Point(p.x, -p.y) for p in points]


def shaped_chain(rng: np.random.Generator, shape: Shape, n: int, coord_range: int) -> List[Point]:
    if shape is Shape.UNIFORM:
        return uniform_chain(rng, n, coord_range)
    if shape is Shape.CONVEX_BELOW:
        return convex_chain(rng, n, coord_range)
    if shape is Shape.CONVEX_ABOVE:
        return mirrored(convex_chain(rng, n, coord_range))
    return collinear_chain(rng, n, coord_range)


def mixed_point_seq(rng: np.random.Generator, n: int, coord_range: int) -> PointSeq:
    shape = MIXED_SHAPES[int(rng.choice(len(MIXED_SHAPES), p=MIXED_WEIGHTS))]
    return PointSeq(shaped_chain(rng, shape, n, coord_range))


def convex_point_seq(rng: np.random.Generator, n: int, coord_range: int) -> PointSeq:
    shape = Shape.CONVEX_BELOW if rng.random() < 0.5 else Shape.CONVEX_ABOVE
    return PointSeq(shaped_chain(rng, shape, n, coord_range))


def relaxed_point_seq(
        rng: np.random.Generator,
        n: int,
        coord_range: int,
        both_ends_probability: float = 0.25,
) -> PointSeq:
    """Instance with ``x_1 = x_2`` (and sometimes ``x_{n-1} = x_n``).

    A chain of ``n - 1`` (or ``n - 2``) points with strictly increasing x is
    extended by a point sharing the x value of its first (and last) point,
    placed above or below it at random.
    """
    both = n >= 4 and rng.random() < both_ends_probability
    core_n = n - 2 if both else n - 1
    shape = MIXED_SHAPES[int(rng.choice(len(MIXED_SHAPES), p=MIXED_WEIGHTS))]
    if core_n < 3:
        core = uniform_chain(rng, core_n, coord_range)
    else:
        core = shaped_chain(rng, shape, core_n, coord_range)
    offset = RandInt(1, coord_range).ints(rng, 2)
    up = rng.random() < 0.5
    first = core[0]
    points = [Point(first.x, first.y + (offset[0] if up else -offset[0]))] + core
    if both:
        last = core[-1]
        points.append(Point(last.x, last.y + (offset[1] if not up else -offset[1])))
    return PointSeq(points, relax_endpoints=True)


def _sorted_diffs(
        rng: np.random.Generator,
        count: int,
        low: int,
        high: int,
        descending: bool = False,
) -> List[int]:
    if count <= 0:
        return []
    diffs = sorted(RandInt(low, high).ints(rng, count))
    return diffs[::-1] if descending else diffs


def hypothesis_sequences(
        rng: np.random.Generator,
        theorem: Theorem,
        n: int,
        coord_range: int,
) -> Tuple[RealSeq, RealSeq, Optional[int]]:
    """Coordinate sequences satisfying the hypotheses of ``theorem`` by
    construction.

    Returns:
        ``(xs, ys, m)``, where ``m`` is the designed pivot for ``THM17``
        (the leftmost minimizer of ``ys``) and ``None`` otherwise.
    """
    theorem = Theorem(theorem)
    step = max(1, coord_range // max(1, n))
    x0 = RandInt(-coord_range, coord_range).one(rng)
    y0 = RandInt(-coord_range, coord_range).one(rng)
    if theorem in (Theorem.PROP1, Theorem.THM15):
        # xs: positive nonincreasing differences; ys: nonnegative nondecreasing
        dx = _sorted_diffs(rng, n - 1, 1, step, descending=True)
        dy = _sorted_diffs(rng, n - 1, 0, step)
        return RealSeq(prefix_sums(x0, dx)), RealSeq(prefix_sums(y0, dy)), None
    if theorem in (Theorem.PROP2, Theorem.THM16):
        # xs: positive nondecreasing differences; ys: nonpositive nondecreasing
        dx = _sorted_diffs(rng, n - 1, 1, step)
        dy = _sorted_diffs(rng, n - 1, -step, 0)
        return RealSeq(prefix_sums(x0, dx)), RealSeq(prefix_sums(y0, dy)), None
    # THM17: ys decreases strictly up to m, then increases weakly, so m is
    # the leftmost minimizer. xs is convex up to m and concave from m on.
    m = int(rng.integers(1, n + 1))
    dy = (_sorted_diffs(rng, m - 1, -step, -1)
          + _sorted_diffs(rng, n - m, 0, step))
    dx = (_sorted_diffs(rng, m - 1, 1, step)
          + _sorted_diffs(rng, n - m, 1, step, descending=True))
    return RealSeq(prefix_sums(x0, dx)), RealSeq(prefix_sums(y0, dy)), m


def hypothesis_point_seq(
        rng: np.random.Generator,
        theorem: Theorem,
        n: int,
        coord_range: int,
) -> PointSeq:
    xs, ys, _ = hypothesis_sequences(rng, theorem, n, coord_range)
    return PointSeq.from_sequences(xs, ys)


def random_ratio_list(
        rng: np.random.Generator,
        max_len: int = 10,
        numerator_range: int = 100,
        max_denominator: int = 100,
) -> List[Tuple[int, int]]:
    n = int(rng.integers(1, max_len + 1))
    a = RandInt(-numerator_range, numerator_range).ints(rng, n)
    b = RandInt(1, max_denominator).ints(rng, n)
    return list(zip(a, b))

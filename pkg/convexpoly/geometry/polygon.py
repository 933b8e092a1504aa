# convexpoly - exact convex polygon and convex sequence toolkit

"""Slope-monotonicity classification of x-sorted point sequences.

For points ``P_1, ..., P_n`` (``n >= 3``) with ``x_1 < ... < x_n``, the closed
polygon ``P_1 P_2 ... P_n P_1`` is convex and lies below its chord
``P_1 P_n`` exactly when the slopes of consecutive edges are nondecreasing,

    (y_i - y_{i-1}) / (x_i - x_{i-1}) <= (y_{i+1} - y_i) / (x_{i+1} - x_i)
    for all i in 2..n-1,

and it is convex and lies above the chord exactly when they are
nonincreasing. :py:func:`classify` decides this with exact, division-free
comparisons.

The module also contains checkers for the sequence-convexity hypotheses
under which the coordinate sequences alone guarantee a convex polygon
(see :py:class:`Theorem`).
"""

import enum
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, NamedTuple, Optional, Tuple, Union

from convexpoly.exceptions import (
    DegenerateChord, InvalidPointSeq, LengthMismatch, PreconditionViolated
)
from convexpoly.scalar import Ordering, ScalarLike, as_scalar, render_scalar
from convexpoly.sequences import RealSeq, SeqLike, analyze_sequence, as_real_seq

logger = logging.getLogger('convexpolylog')


class Point(NamedTuple):
    x: Fraction
    y: Fraction

    @classmethod
    def of(cls, x: ScalarLike, y: ScalarLike) -> 'Point':
        return cls(as_scalar(x), as_scalar(y))

    def __str__(self) -> str:
        return f'({self.x}, {self.y})'


PointLike = Union[Point, Tuple[ScalarLike, ScalarLike]]


def as_point(p: PointLike) -> Point:
    if isinstance(p, Point):
        return p
    x, y = p
    return Point.of(x, y)


class PointSeq:
    """Ordered points ``P_1, ..., P_n`` with x-ordering guarantees.

    Args:
        points: At least 3 pairwise distinct points.
        relax_endpoints: If ``False`` (default), ``x_1 < x_2 < ... < x_n`` is
            required. If ``True``, the end points may share their x value
            with their neighbour (``x_1 <= x_2`` and ``x_{n-1} <= x_n``),
            giving a vertical first and/or last edge. ``x_1 < x_n`` is
            required in both cases.

    Raises:
        InvalidPointSeq: If any of the conditions above is violated.
    """
    __slots__ = ('_points', '_relax_endpoints')

    def __init__(self, points: Iterable[PointLike], relax_endpoints: bool = False):
        points = tuple(as_point(p) for p in points)
        self._points = points
        self._relax_endpoints = bool(relax_endpoints)
        self._validate()

    def _validate(self) -> None:
        pts = self._points
        n = len(pts)
        if n < 3:
            raise InvalidPointSeq(f'n must be at least 3, got {n} points.')
        if len(set(pts)) != n:
            seen = set()
            for i, p in enumerate(pts, start=1):
                if p in seen:
                    raise InvalidPointSeq(f'Duplicate point P_{i} = {p}.')
                seen.add(p)
        if not pts[0].x < pts[-1].x:
            raise InvalidPointSeq(
                f'x_1 = {pts[0].x} must be smaller than x_n = {pts[-1].x}.')
        for i in range(2, n - 1):  # interior pairs (x_i, x_{i+1}), 1-based
            if not pts[i - 1].x < pts[i].x:
                raise InvalidPointSeq(
                    f'Interior x values must be strictly increasing, but '
                    f'x_{i} = {pts[i - 1].x} >= x_{i + 1} = {pts[i].x}.')
        for i in (1, n - 1):  # end pairs (x_1, x_2) and (x_{n-1}, x_n)
            lo, hi = pts[i - 1].x, pts[i].x
            if self._relax_endpoints:
                if not lo <= hi:
                    raise InvalidPointSeq(
                        f'x_{i} = {lo} > x_{i + 1} = {hi} (relaxed end points '
                        f'still need x_{i} <= x_{i + 1}).')
            elif not lo < hi:
                raise InvalidPointSeq(
                    f'x_{i} = {lo} >= x_{i + 1} = {hi}. Use relax_endpoints '
                    f'to allow a vertical end edge.')

    @classmethod
    def from_sequences(
            cls,
            xs: SeqLike,
            ys: SeqLike,
            relax_endpoints: bool = False,
    ) -> 'PointSeq':
        xs, ys = as_real_seq(xs), as_real_seq(ys)
        if len(xs) != len(ys):
            raise LengthMismatch(f'len(xs) = {len(xs)} != len(ys) = {len(ys)}')
        return cls(zip(xs, ys), relax_endpoints=relax_endpoints)

    @property
    def points(self) -> Tuple[Point, ...]:
        return self._points

    @property
    def relax_endpoints(self) -> bool:
        return self._relax_endpoints

    @property
    def xs(self) -> RealSeq:
        return RealSeq(p.x for p in self._points)

    @property
    def ys(self) -> RealSeq:
        return RealSeq(p.y for p in self._points)

    @property
    def first(self) -> Point:
        return self._points[0]

    @property
    def last(self) -> Point:
        return self._points[-1]

    def __len__(self) -> int:
        return len(self._points)

    def __getitem__(self, index):
        return self._points[index]

    def __iter__(self):
        return iter(self._points)

    def __eq__(self, other) -> bool:
        if isinstance(other, PointSeq):
            return (self._points == other._points
                    and self._relax_endpoints == other._relax_endpoints)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self._points, self._relax_endpoints))

    def __repr__(self) -> str:
        relax = ', relax_endpoints=True' if self._relax_endpoints else ''
        return f'PointSeq([{", ".join(str(p) for p in self._points)}]{relax})'


def mirror(p: PointSeq) -> PointSeq:
    """Reflect ``p`` at the x axis (``y -> -y``)."""
    return PointSeq([Point(q.x, -q.y) for q in p], relax_endpoints=p.relax_endpoints)


@dataclass(frozen=True)
class SlopeProfile:
    """Edge slopes of the open chain ``P_1 ... P_n`` and their ordering.

    ``slopes[k]`` is the slope of edge ``P_{k+1} P_{k+2}`` (0-based ``k``),
    or ``None`` for a vertical edge (only possible at relaxed end points).
    ``comparisons[k]`` orders ``slopes[k]`` against ``slopes[k+1]``, i.e. it is
    the comparison taken at vertex ``i = k + 2``. A vertical edge has no
    slope value, but the cross-multiplied comparison still orders it: a
    downward edge counts as lower than every slope, an upward edge as
    higher.
    """
    slopes: Tuple[Optional[Fraction], ...]
    comparisons: Tuple[Ordering, ...]

    def rendered_slopes(self) -> List[str]:
        return ['vertical' if s is None else render_scalar(s) for s in self.slopes]


def _edge_deltas(p: PointSeq) -> List[Tuple[Fraction, Fraction]]:
    return [(b.x - a.x, b.y - a.y) for a, b in zip(p, p[1:])]


def slope_profile(p: PointSeq) -> SlopeProfile:
    """Exact slopes and division-free slope comparisons of ``p``.

    The comparison at vertex ``i`` is the sign of
    ``(y_i - y_{i-1})(x_{i+1} - x_i) - (y_{i+1} - y_i)(x_i - x_{i-1})``, which
    has the direction of ``slope_{i-1}`` vs. ``slope_i`` when both widths are
    positive.
    """
    deltas = _edge_deltas(p)
    slopes = tuple(None if dx == 0 else dy / dx for dx, dy in deltas)
    comparisons = []
    for (dx0, dy0), (dx1, dy1) in zip(deltas, deltas[1:]):
        d = dy0 * dx1 - dy1 * dx0
        comparisons.append(Ordering.of((d > 0) - (d < 0)))
    return SlopeProfile(slopes=slopes, comparisons=tuple(comparisons))


class VerdictKind(enum.Enum):
    CONVEX_BELOW_CHORD = 'ConvexBelowChord'
    CONVEX_ABOVE_CHORD = 'ConvexAboveChord'
    NOT_CONVEX = 'NotConvex'
    DEGENERATE_COLLINEAR = 'DegenerateCollinear'

    @property
    def is_convex(self) -> bool:
        return self in (VerdictKind.CONVEX_BELOW_CHORD, VerdictKind.CONVEX_ABOVE_CHORD)

    def mirrored(self) -> 'VerdictKind':
        return {
            VerdictKind.CONVEX_BELOW_CHORD: VerdictKind.CONVEX_ABOVE_CHORD,
            VerdictKind.CONVEX_ABOVE_CHORD: VerdictKind.CONVEX_BELOW_CHORD,
        }.get(self, self)


@dataclass(frozen=True)
class PolygonVerdict:
    """Classification of a :py:class:`PointSeq`.

    ``strict`` is ``True`` when no three consecutive chain vertices are
    collinear. ``witness`` (1-based vertex index) is only set for
    ``NOT_CONVEX``.
    """
    kind: VerdictKind
    strict: bool
    witness: Optional[int] = None

    def __post_init__(self):
        if self.kind is VerdictKind.NOT_CONVEX and self.witness is None:
            raise ValueError('A NotConvex verdict needs a witness index.')

    def to_dict(self) -> dict:
        return {'kind': self.kind.value, 'strict': self.strict, 'witness': self.witness}


def classify(p: PointSeq) -> PolygonVerdict:
    """Classify ``p`` as a convex polygon below/above its chord.

    Returns:
        ``CONVEX_BELOW_CHORD`` if the slopes are nondecreasing (and not all
        equal), ``CONVEX_ABOVE_CHORD`` if they are nonincreasing (and not all
        equal), ``DEGENERATE_COLLINEAR`` if all slopes are equal and
        ``NOT_CONVEX`` otherwise. For ``NOT_CONVEX``, the witness is the first
        vertex at which one of the two monotonicity directions breaks.
    """
    comparisons = slope_profile(p).comparisons
    strict = Ordering.EQUAL not in comparisons
    if all(c is Ordering.EQUAL for c in comparisons):
        return PolygonVerdict(VerdictKind.DEGENERATE_COLLINEAR, strict=False)
    # comparisons[k] belongs to vertex i = k + 2
    below_fails = [k + 2 for k, c in enumerate(comparisons) if c is Ordering.GREATER]
    above_fails = [k + 2 for k, c in enumerate(comparisons) if c is Ordering.LESS]
    if not below_fails:
        return PolygonVerdict(VerdictKind.CONVEX_BELOW_CHORD, strict=strict)
    if not above_fails:
        return PolygonVerdict(VerdictKind.CONVEX_ABOVE_CHORD, strict=strict)
    witness = min(below_fails[0], above_fails[0])
    logger.debug(f'{p} is not convex: slopes break monotonicity at vertex {witness}')
    return PolygonVerdict(VerdictKind.NOT_CONVEX, strict=strict, witness=witness)


class Side(enum.Enum):
    BELOW = 'below'
    ON = 'on'
    ABOVE = 'above'


def chord_side(p: PointLike, first: PointLike, last: PointLike) -> Side:
    """Position of ``p`` relative to the line through ``first`` and ``last``.

    Compares ``(p.y - y_1)(x_n - x_1)`` with ``(p.x - x_1)(y_n - y_1)``.

    Raises:
        DegenerateChord: If ``first.x >= last.x``.
    """
    p, first, last = as_point(p), as_point(first), as_point(last)
    width = last.x - first.x
    if width <= 0:
        raise DegenerateChord(
            f'Chord from {first} to {last} needs first.x < last.x.')
    lhs = (p.y - first.y) * width
    rhs = (p.x - first.x) * (last.y - first.y)
    if lhs < rhs:
        return Side.BELOW
    if lhs > rhs:
        return Side.ABOVE
    return Side.ON


class Theorem(enum.Enum):
    """Sufficient conditions on the coordinate sequences.

    * ``PROP1``/``THM15``: xs strictly increasing and concave, ys increasing
      and convex.
    * ``PROP2``/``THM16``: xs strictly increasing and convex, ys convex with
      ``y_{i+1} - y_i <= 0``.
    * ``THM17``: ys convex with its minimum at ``m``, xs strictly increasing,
      ``x_1..x_m`` convex and ``x_m..x_n`` concave.

    ``PROP1``/``PROP2`` conclude the slope inequality, the theorems conclude
    that the points form a convex polygon.
    """
    PROP1 = 'Prop1'
    PROP2 = 'Prop2'
    THM15 = 'Thm15'
    THM16 = 'Thm16'
    THM17 = 'Thm17'


@dataclass(frozen=True)
class HypothesisReport:
    theorem: Theorem
    satisfied: bool
    failed_condition: Optional[str] = None
    failed_index: Optional[int] = None
    pivot_m: Optional[int] = None

    def __post_init__(self):
        if not self.satisfied and self.failed_condition is None:
            raise ValueError('An unsatisfied HypothesisReport needs a failed_condition.')

    def to_dict(self) -> dict:
        return {
            'theorem': self.theorem.value,
            'satisfied': self.satisfied,
            'failed_condition': self.failed_condition,
            'failed_index': self.failed_index,
            'pivot_m': self.pivot_m,
        }


def _strictly_increasing_violation(xs: RealSeq, relax_endpoints: bool) -> Optional[int]:
    """First position ``i`` with ``x_{i-1} >= x_i`` (``>`` at relaxed ends)."""
    n = len(xs)
    for i in range(2, n + 1):
        lo, hi = xs[i - 2], xs[i - 1]
        at_end = i == 2 or i == n
        if relax_endpoints and at_end:
            if lo > hi:
                return i
        elif lo >= hi:
            return i
    return None


def _check_x_monotone_and_shape(
        xs: RealSeq,
        relax_endpoints: bool,
        shape: str,
) -> Optional[Tuple[str, int]]:
    bad = _strictly_increasing_violation(xs, relax_endpoints)
    if bad is not None:
        return 'xs_not_strictly_increasing', bad
    report = analyze_sequence(xs)
    bad = report.violations[shape]
    if bad is not None:
        return f'xs_not_{shape}', bad
    return None


def _check_thm17_split(xs: RealSeq, m: int) -> Optional[Tuple[str, int]]:
    left = analyze_sequence(xs[:m])
    if not left.is_convex:
        return 'xs_left_not_convex', left.first_violation_index
    right = analyze_sequence(xs[m - 1:])
    if not right.is_concave:
        return 'xs_right_not_concave', right.violations['concave'] + m - 1
    return None


def check_hypotheses(
        xs: SeqLike,
        ys: SeqLike,
        theorem: Union[Theorem, str],
        relax_endpoints: bool = False,
) -> HypothesisReport:
    """Evaluate the hypotheses of ``theorem`` on the coordinate sequences.

    Conditions are checked in a fixed order and the first failing one is
    reported by code (``xs_not_strictly_increasing``, ``xs_not_concave``,
    ``xs_not_convex``, ``ys_not_convex``, ``ys_not_increasing``,
    ``ys_not_decreasing``, ``xs_left_not_convex``, ``xs_right_not_concave``)
    together with the 1-based position where it fails.

    For ``THM17``, the pivot ``m`` is the leftmost index attaining
    ``min ys``; if the split at ``m`` fails and the minimum is attained on a
    plateau, the split at the plateau's right end is tried as well.
    ``pivot_m`` records the split that succeeded (or the leftmost one).

    Args:
        xs: x coordinates, length ``n >= 3``.
        ys: y coordinates, same length as ``xs``.
        theorem: Which hypothesis list to evaluate.
        relax_endpoints: Only require ``x_1 <= x_2`` and
            ``x_{n-1} <= x_n`` at the end points.

    Raises:
        LengthMismatch: If ``len(xs) != len(ys)``.
    """
    xs, ys = as_real_seq(xs), as_real_seq(ys)
    theorem = Theorem(theorem)
    if len(xs) != len(ys):
        raise LengthMismatch(f'len(xs) = {len(xs)} != len(ys) = {len(ys)}')
    if len(xs) < 3:
        raise ValueError(f'Hypotheses need at least 3 points, got {len(xs)}.')

    def failed(condition, index, pivot_m=None):
        return HypothesisReport(theorem, satisfied=False, failed_condition=condition,
                                failed_index=index, pivot_m=pivot_m)

    y_report = analyze_sequence(ys)

    if theorem in (Theorem.PROP1, Theorem.THM15):
        bad = _check_x_monotone_and_shape(xs, relax_endpoints, 'concave')
        if bad is not None:
            return failed(*bad)
        if not y_report.is_convex:
            return failed('ys_not_convex', y_report.first_violation_index)
        if not y_report.is_increasing:
            return failed('ys_not_increasing', y_report.violations['increasing'])
        return HypothesisReport(theorem, satisfied=True)

    if theorem in (Theorem.PROP2, Theorem.THM16):
        bad = _check_x_monotone_and_shape(xs, relax_endpoints, 'convex')
        if bad is not None:
            return failed(*bad)
        if not y_report.is_convex:
            return failed('ys_not_convex', y_report.first_violation_index)
        if not y_report.is_decreasing:
            return failed('ys_not_decreasing', y_report.violations['decreasing'])
        return HypothesisReport(theorem, satisfied=True)

    # Theorem.THM17
    if not y_report.is_convex:
        return failed('ys_not_convex', y_report.first_violation_index)
    y_min = min(ys)
    minimizers = [i for i, y in enumerate(ys, start=1) if y == y_min]
    m_left, m_right = minimizers[0], minimizers[-1]
    bad = _strictly_increasing_violation(xs, relax_endpoints)
    if bad is not None:
        return failed('xs_not_strictly_increasing', bad, pivot_m=m_left)
    bad = _check_thm17_split(xs, m_left)
    if bad is None:
        return HypothesisReport(theorem, satisfied=True, pivot_m=m_left)
    if m_right != m_left and _check_thm17_split(xs, m_right) is None:
        logger.debug(f'Thm17 split succeeded at plateau end m = {m_right}, not m = {m_left}')
        return HypothesisReport(theorem, satisfied=True, pivot_m=m_right)
    return failed(*bad, pivot_m=m_left)


def slope_inequality_witness(xs: SeqLike, ys: SeqLike) -> Optional[int]:
    """First interior ``i`` where
    ``(y_i - y_{i-1})/(x_i - x_{i-1}) <= (y_{i+1} - y_i)/(x_{i+1} - x_i)``
    fails, or ``None`` if it holds everywhere.

    No hypotheses are assumed, so this also evaluates instances whose x
    differences are negative.

    Raises:
        LengthMismatch: If ``len(xs) != len(ys)``.
        ValueError: If two consecutive x values coincide.
    """
    xs, ys = as_real_seq(xs), as_real_seq(ys)
    if len(xs) != len(ys):
        raise LengthMismatch(f'len(xs) = {len(xs)} != len(ys) = {len(ys)}')
    slopes = []
    for i in range(1, len(xs)):
        dx = xs[i] - xs[i - 1]
        if dx == 0:
            raise ValueError(f'x_{i} = x_{i + 1} = {xs[i]}: slope undefined.')
        slopes.append((ys[i] - ys[i - 1]) / dx)
    for k, (s0, s1) in enumerate(zip(slopes, slopes[1:])):
        if s0 > s1:
            return k + 2
    return None


def slope_inequality_from_hypotheses(
        xs: SeqLike,
        ys: SeqLike,
        which: Union[Theorem, str],
) -> bool:
    """Evaluate the slope inequality on an instance satisfying the ``PROP1`` or ``PROP2`` hypotheses.

    Under the hypotheses, the inequality always holds, so this returns
    ``True`` for every admissible input. It is exposed so that the
    implication can be tested on generated instances.

    Raises:
        PreconditionViolated: If the hypotheses of ``which`` do not hold.
        ValueError: If ``which`` is not ``PROP1`` or ``PROP2``.
    """
    which = Theorem(which)
    if which not in (Theorem.PROP1, Theorem.PROP2):
        raise ValueError(f'which must be Prop1 or Prop2, not {which.value}.')
    report = check_hypotheses(xs, ys, which)
    if not report.satisfied:
        raise PreconditionViolated(
            f'{which.value} hypotheses fail: {report.failed_condition} '
            f'at i = {report.failed_index}.')
    xs, ys = as_real_seq(xs), as_real_seq(ys)
    for i in range(1, len(xs) - 1):  # 0-based interior vertex
        lhs = (ys[i] - ys[i - 1]) * (xs[i + 1] - xs[i])
        rhs = (ys[i + 1] - ys[i]) * (xs[i] - xs[i - 1])
        if lhs > rhs:
            return False
    return True

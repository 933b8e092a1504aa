# convexpoly - exact convex polygon and convex sequence toolkit

"""Convexity, concavity and monotonicity of finite real sequences, the
mediant inequality and the pivot of a convex sequence.

Indices in reports and in the pivot API are 1-based (``u_1, ..., u_n``),
the way the sequences are usually written down; Python-level access to a
:py:class:`RealSeq` (``u[0]``) stays 0-based.

A sequence is convex if ``2 u_i <= u_{i-1} + u_{i+1}`` for every interior
``i`` and concave if the reverse inequality holds. Both conditions are
vacuous for sequences of length 1 and 2.
"""

import enum
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, Iterator, Optional, Sequence, Tuple, Union

from convexpoly.exceptions import (
    NonPositiveDenominator, NonPositiveValue, PreconditionViolated
)
from convexpoly.scalar import ScalarLike, as_scalar

logger = logging.getLogger('convexpolylog')


class RealSeq:
    """Immutable, non-empty sequence of exact scalars."""
    __slots__ = ('_values',)

    def __init__(self, values: Iterable[ScalarLike]):
        values = tuple(as_scalar(v) for v in values)
        if len(values) < 1:
            raise ValueError('A RealSeq needs at least one element.')
        self._values = values

    @property
    def values(self) -> Tuple[Fraction, ...]:
        return self._values

    def __len__(self) -> int:
        return len(self._values)

    def __getitem__(self, index):
        return self._values[index]

    def __iter__(self) -> Iterator[Fraction]:
        return iter(self._values)

    def __neg__(self) -> 'RealSeq':
        return RealSeq(-v for v in self._values)

    def __eq__(self, other) -> bool:
        if isinstance(other, RealSeq):
            return self._values == other._values
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._values)

    def __repr__(self) -> str:
        return f'RealSeq([{", ".join(str(v) for v in self._values)}])'


SeqLike = Union[RealSeq, Sequence[ScalarLike]]


def as_real_seq(u: SeqLike) -> RealSeq:
    return u if isinstance(u, RealSeq) else RealSeq(u)


class RatioList:
    """Non-empty list of ratios ``a_i / b_i`` with ``b_i > 0``.

    Raises:
        NonPositiveDenominator: If some ``b_i <= 0``.
    """
    __slots__ = ('_pairs',)

    def __init__(self, pairs: Iterable[Tuple[ScalarLike, ScalarLike]]):
        checked = []
        for i, (a, b) in enumerate(pairs, start=1):
            a, b = as_scalar(a), as_scalar(b)
            if b <= 0:
                raise NonPositiveDenominator(f'b_{i} = {b} is not positive.')
            checked.append((a, b))
        if not checked:
            raise ValueError('A RatioList needs at least one pair.')
        self._pairs = tuple(checked)

    @property
    def pairs(self) -> Tuple[Tuple[Fraction, Fraction], ...]:
        return self._pairs

    def __len__(self) -> int:
        return len(self._pairs)

    def __iter__(self):
        return iter(self._pairs)

    def __repr__(self) -> str:
        return 'RatioList([{}])'.format(
            ', '.join(f'({a}, {b})' for a, b in self._pairs))


@dataclass(frozen=True)
class SeqReport:
    """Convexity and monotonicity flags of one sequence.

    ``first_violation_index`` is the first interior position ``i`` where
    ``2 u_i <= u_{i-1} + u_{i+1}`` fails (``None`` for convex sequences).
    ``violations`` holds the analogous first failing position for every
    flag: the interior ``i`` for (strict) convexity/concavity and the
    position ``i`` of the second element of the first offending pair
    ``(u_{i-1}, u_i)`` for the monotonicity flags.
    """
    is_convex: bool
    is_concave: bool
    is_increasing: bool
    is_strictly_increasing: bool
    is_decreasing: bool
    is_strictly_decreasing: bool = False
    is_strictly_convex: bool = False
    is_strictly_concave: bool = False
    first_violation_index: Optional[int] = None
    violations: Dict[str, Optional[int]] = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            'is_convex': self.is_convex,
            'is_concave': self.is_concave,
            'is_increasing': self.is_increasing,
            'is_strictly_increasing': self.is_strictly_increasing,
            'is_decreasing': self.is_decreasing,
            'is_strictly_decreasing': self.is_strictly_decreasing,
            'is_strictly_convex': self.is_strictly_convex,
            'is_strictly_concave': self.is_strictly_concave,
            'first_violation_index': self.first_violation_index,
            'violations': dict(sorted(self.violations.items())),
        }


def _first(indices: Iterable[int]) -> Optional[int]:
    return next(iter(indices), None)


def analyze_sequence(u: SeqLike) -> SeqReport:
    """Evaluate the convexity, concavity and monotonicity predicates of ``u``.

    Examples:
        >>> analyze_sequence([0, 1, 3, 6]).is_convex
        True
        >>> analyze_sequence([0, 2, 1]).first_violation_index
        2
    """
    u = as_real_seq(u)
    n = len(u)
    # second differences u_{i-1} + u_{i+1} - 2 u_i for interior i = 2..n-1
    second = [(i, u[i - 2] + u[i] - 2 * u[i - 1]) for i in range(2, n)]
    # first differences u_i - u_{i-1} for i = 2..n
    first = [(i, u[i - 1] - u[i - 2]) for i in range(2, n + 1)]

    violations = {
        'convex': _first(i for i, d in second if d < 0),
        'concave': _first(i for i, d in second if d > 0),
        'strictly_convex': _first(i for i, d in second if d <= 0),
        'strictly_concave': _first(i for i, d in second if d >= 0),
        'increasing': _first(i for i, d in first if d < 0),
        'strictly_increasing': _first(i for i, d in first if d <= 0),
        'decreasing': _first(i for i, d in first if d > 0),
        'strictly_decreasing': _first(i for i, d in first if d >= 0),
    }
    return SeqReport(
        is_convex=violations['convex'] is None,
        is_concave=violations['concave'] is None,
        is_increasing=violations['increasing'] is None,
        is_strictly_increasing=violations['strictly_increasing'] is None,
        is_decreasing=violations['decreasing'] is None,
        is_strictly_decreasing=violations['strictly_decreasing'] is None,
        is_strictly_convex=violations['strictly_convex'] is None,
        is_strictly_concave=violations['strictly_concave'] is None,
        first_violation_index=violations['convex'],
        violations=violations,
    )


def differences(u: SeqLike) -> Optional[RealSeq]:
    """Consecutive differences ``u_{i+1} - u_i`` (``None`` if ``len(u) == 1``)."""
    u = as_real_seq(u)
    if len(u) < 2:
        return None
    return RealSeq(b - a for a, b in zip(u, u[1:]))


def is_convex_by_differences(u: SeqLike) -> bool:
    """Convexity through nondecreasing consecutive differences.

    Equivalent to ``analyze_sequence(u).is_convex``, computed the other way.
    """
    d = differences(u)
    if d is None:
        return True
    return all(a <= b for a, b in zip(d, d[1:]))


def merge_mediant(
        r1: Tuple[ScalarLike, ScalarLike],
        r2: Tuple[ScalarLike, ScalarLike],
) -> Fraction:
    """Mediant ``(a1 + a2) / (b1 + b2)`` of two ratios with positive
    denominators; it always lies between ``a1 / b1`` and ``a2 / b2``.

    Raises:
        NonPositiveDenominator: If ``b1 <= 0`` or ``b2 <= 0``.
        RuntimeError: If the mediant falls outside the two ratios.
    """
    (a1, b1), (a2, b2) = RatioList([r1, r2]).pairs
    mid = Fraction(a1 + a2, b1 + b2)
    lo, hi = sorted((Fraction(a1, b1), Fraction(a2, b2)))
    if not lo <= mid <= hi:
        raise RuntimeError(f'Mediant {mid} of {a1}/{b1} and {a2}/{b2} is not between the two ratios.')
    return mid


def mediant_bounds(r: Union[RatioList, Iterable[Tuple[ScalarLike, ScalarLike]]]
                   ) -> Tuple[Fraction, Fraction, Fraction]:
    """Bounds of the mediant of ``a_1/b_1, ..., a_n/b_n``.

    Returns:
        ``(lo, mid, hi)`` with ``lo = min a_i/b_i``, ``hi = max a_i/b_i`` and
        ``mid = (a_1 + ... + a_n) / (b_1 + ... + b_n)``, which always
        satisfy ``lo <= mid <= hi``.

    Raises:
        NonPositiveDenominator: If some ``b_i <= 0``.
    """
    if not isinstance(r, RatioList):
        r = RatioList(r)
    pairs = r.pairs
    lo_a, lo_b = hi_a, hi_b = pairs[0]
    # Division-free: a/b < c/d  <=>  a*d < c*b  for b, d > 0
    for a, b in pairs[1:]:
        if a * lo_b < lo_a * b:
            lo_a, lo_b = a, b
        if a * hi_b > hi_a * b:
            hi_a, hi_b = a, b
    mid = Fraction(sum(a for a, _ in pairs), sum(b for _, b in pairs))
    return lo_a / lo_b, mid, hi_a / hi_b


class MeanKind(enum.Enum):
    ARITHMETIC = 'arithmetic'
    HARMONIC = 'harmonic'


def mean_bounds(
        x: SeqLike,
        kind: Union[MeanKind, str] = MeanKind.ARITHMETIC,
) -> Tuple[Fraction, Fraction, Fraction]:
    """``(min x_i, mean, max x_i)`` for the arithmetic or harmonic mean.

    Both means are obtained from :py:func:`mediant_bounds`: the arithmetic
    mean with ``a_i = x_i, b_i = 1``, the harmonic mean with ``a_i = 1,
    b_i = 1 / x_i``.

    Raises:
        NonPositiveValue: For the harmonic mean if some ``x_i <= 0``.
    """
    x = as_real_seq(x)
    kind = MeanKind(kind)
    if kind is MeanKind.ARITHMETIC:
        return mediant_bounds((xi, 1) for xi in x)
    for i, xi in enumerate(x, start=1):
        if xi <= 0:
            raise NonPositiveValue(f'Harmonic mean needs positive values, x_{i} = {xi}.')
    return mediant_bounds((1, 1 / xi) for xi in x)


def _require_convex(u: RealSeq, caller: str) -> None:
    report = analyze_sequence(u)
    if not report.is_convex:
        raise PreconditionViolated(
            f'{caller}() needs a convex sequence, but 2u_i <= u_(i-1) + u_(i+1) '
            f'fails at i = {report.first_violation_index}.'
        )


def _pivot_holds(u: RealSeq, m: int) -> bool:
    um = u[m - 1]
    left = all(u[i] <= um for i in range(m - 1))
    right = all(um <= u[i] for i in range(m, len(u)))
    return left or right


def check_pivot(u: SeqLike, m: int) -> bool:
    """Check whether ``m`` (1-based) is a pivot of the convex sequence ``u``.

    ``m`` is a pivot if ``u_i <= u_m`` for all ``i < m`` or ``u_m <= u_i``
    for all ``i > m``. Both clauses are checked independently.

    Raises:
        PreconditionViolated: If ``u`` is not convex.
        ValueError: If ``m`` is not in ``1..n``.
    """
    u = as_real_seq(u)
    _require_convex(u, 'check_pivot')
    if not 1 <= m <= len(u):
        raise ValueError(f'Pivot index m = {m} is out of range 1..{len(u)}.')
    return _pivot_holds(u, m)


def find_pivot(u: SeqLike) -> int:
    """Smallest pivot index ``m`` (1-based) of the convex sequence ``u``.

    Every convex sequence has a pivot, so this always returns.

    Raises:
        PreconditionViolated: If ``u`` is not convex.
    """
    u = as_real_seq(u)
    _require_convex(u, 'find_pivot')
    for m in range(1, len(u) + 1):
        if _pivot_holds(u, m):
            logger.debug(f'Pivot of {u} found at m = {m}')
            return m
    # Unreachable for convex input
    raise PreconditionViolated(f'No pivot found in convex sequence {u}.')

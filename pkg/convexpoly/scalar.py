# convexpoly - exact convex polygon and convex sequence toolkit

"""Exact rational scalars.

Every quantity that takes part in a geometric or sequential predicate is a
:py:class:`fractions.Fraction`. Fractions are always stored in canonical
form (positive denominator, coprime numerator and denominator), they are
immutable and hashable, and ``+``, ``-``, ``*`` and ``/`` are exact.

Decimal literals are read as exact rationals (``"0.1"`` is ``1/10``), never
through binary floating point.
"""

import enum
import re
from decimal import Decimal
from fractions import Fraction
from numbers import Rational
from typing import Union

from convexpoly.exceptions import ParseError, ZeroDenominator

Scalar = Fraction

ScalarLike = Union[Fraction, int, str, Decimal]

_DECIMAL_FORMAT = re.compile(r'\A(?P<sign>[-+]?)(?P<int>\d+)(?:\.(?P<frac>\d*))?\Z')
_FRACTION_FORMAT = re.compile(r'\A(?P<num>[-+]?\d+)/(?P<denom>[-+]?\d+)\Z')


class Ordering(enum.Enum):
    """Result of an exact three-way comparison"""
    LESS = -1
    EQUAL = 0
    GREATER = 1

    @classmethod
    def of(cls, sign: int) -> 'Ordering':
        """Ordering of a signed integer (only its sign matters)."""
        if sign < 0:
            return cls.LESS
        if sign > 0:
            return cls.GREATER
        return cls.EQUAL

    @property
    def sign(self) -> int:
        return self.value

    @property
    def symbol(self) -> str:
        return {-1: '<', 0: '=', 1: '>'}[self.value]

    def reversed(self) -> 'Ordering':
        return Ordering.of(-self.value)


def parse_scalar(text: str) -> Fraction:
    """Parse a decimal (``"-2.5"``, ``"3"``) or fraction (``"p/q"``) literal.

    Surrounding whitespace is ignored. Exponent notation, underscores,
    ``inf`` and ``nan`` are rejected.

    Raises:
        ParseError: If ``text`` is not one of the accepted forms.
        ZeroDenominator: If ``text`` is a fraction with ``q = 0``.
    """
    if not isinstance(text, str):
        raise ParseError(f'Expected a string, got {type(text).__name__} {text!r}')
    stripped = text.strip()
    m = _FRACTION_FORMAT.match(stripped)
    if m is not None:
        denominator = int(m.group('denom'))
        if denominator == 0:
            raise ZeroDenominator(f'Zero denominator in {text!r}')
        return Fraction(int(m.group('num')), denominator)
    m = _DECIMAL_FORMAT.match(stripped)
    if m is None:
        raise ParseError(f'Invalid scalar literal {text!r}')
    frac = m.group('frac') or ''
    value = Fraction(int(m.group('int') + frac), 10 ** len(frac))
    return -value if m.group('sign') == '-' else value


def render_scalar(a: Rational) -> str:
    """Canonical ``"p/q"`` text, or ``"p"`` when ``q = 1``."""
    return str(Fraction(a))


def as_scalar(value: ScalarLike) -> Fraction:
    """Coerce ``value`` to an exact :py:class:`fractions.Fraction`.

    ``float`` (and ``bool``) inputs are refused, since a binary float
    usually does not hold the value its decimal text suggests.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise ParseError(f'Booleans are not scalars: {value!r}')
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, Decimal):
        if not value.is_finite():
            raise ParseError(f'Non-finite scalar {value!r}')
        return Fraction(value)
    if isinstance(value, str):
        return parse_scalar(value)
    if isinstance(value, Rational):
        return Fraction(value.numerator, value.denominator)
    raise ParseError(
        f'Cannot convert {type(value).__name__} {value!r} to an exact scalar. '
        'Pass decimal text, a fraction string, an int or a Fraction.'
    )


def cmp(a: Rational, b: Rational) -> Ordering:
    """Exact three-way comparison by cross-multiplication.

    Denominators of canonical rationals are positive, so the comparison of
    ``a.numerator * b.denominator`` and ``b.numerator * a.denominator`` has
    the same direction as ``a`` vs. ``b``.
    """
    lhs = a.numerator * b.denominator
    rhs = b.numerator * a.denominator
    return Ordering.of((lhs > rhs) - (lhs < rhs))


def sign(a: Rational) -> int:
    return (a > 0) - (a < 0)

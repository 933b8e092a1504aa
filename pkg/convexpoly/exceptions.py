# convexpoly - exact convex polygon and convex sequence toolkit

"""Exception hierarchy shared by all ``convexpoly`` modules.

Errors about malformed or inadmissible input derive from ``ValueError``,
broken contracts (preconditions of theorem-backed operations, internal
oracle disagreements) derive from ``RuntimeError``. Everything derives
from :py:class:`ConvexPolyError`, so callers can catch the whole family.
"""

from typing import Optional


class ConvexPolyError(Exception):
    """Base class of all errors raised by convexpoly"""
    pass


class ParseError(ConvexPolyError, ValueError):
    """Malformed textual input.

    Args:
        msg: Human-readable description.
        line: 1-based line number in the source file, if known.
        column: 1-based column (or field) number, if known.
        source: Path or name of the source, if known.
    """
    def __init__(
            self,
            msg: str,
            line: Optional[int] = None,
            column: Optional[int] = None,
            source: Optional[str] = None,
    ):
        self.line = line
        self.column = column
        self.source = source
        location = ''
        if source is not None:
            location += f'{source}:'
        if line is not None:
            location += f'{line}:'
            if column is not None:
                location += f'{column}:'
        super().__init__(f'{location} {msg}' if location else msg)


class ZeroDenominator(ParseError):
    """A fraction literal with denominator 0"""
    pass


class NonPositiveDenominator(ConvexPolyError, ValueError):
    pass


class NonPositiveValue(ConvexPolyError, ValueError):
    pass


class PreconditionViolated(ConvexPolyError, RuntimeError):
    """The hypotheses of a theorem-backed operation do not hold"""
    pass


class InvalidPointSeq(ConvexPolyError, ValueError):
    pass


class LengthMismatch(ConvexPolyError, ValueError):
    pass


class DegenerateChord(ConvexPolyError, ValueError):
    pass


class OutOfDomain(ConvexPolyError, ValueError):
    pass


class EmptyInterval(ConvexPolyError, ValueError):
    pass


class InvalidPLFunction(ConvexPolyError, ValueError):
    pass


class OracleInconsistency(ConvexPolyError, RuntimeError):
    """The brute-force oracle contradicted itself (never expected)"""
    pass


class ConfigError(ConvexPolyError, ValueError):
    pass

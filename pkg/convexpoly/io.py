# convexpoly - exact convex polygon and convex sequence toolkit

"""Reading point and sequence files, writing JSON results.

Two file formats are understood, chosen by ``fmt`` or by the file
extension:

* CSV: one point ``x,y`` per line (point files) or one or more values per
  line (sequence files). Blank lines and lines starting with ``#`` are
  skipped, a leading ``x,y`` header is allowed.
* JSON: ``{"points": [["x", "y"], ...], "relax_endpoints": false}`` or
  ``{"values": ["v1", ...]}`` (a bare list is accepted for both). Values
  should be strings; bare JSON numbers are read as exact decimals.

All values end up as exact :py:class:`fractions.Fraction` s. Errors are
raised as :py:class:`ParseError` with the source path and, where the
format has them, line and column.
"""

import csv
import json
import os
from dataclasses import dataclass
from decimal import Decimal
from typing import Any, List, Optional, Sequence

from convexpoly.exceptions import ParseError
from convexpoly.geometry.polygon import Point, PointSeq
from convexpoly.scalar import as_scalar
from convexpoly.sequences import RealSeq

FORMATS = ('csv', 'json')


@dataclass(frozen=True)
class InstanceFile:
    """Parsed content of an input file.

    Exactly one of ``points`` (point files) and ``values`` (sequence files)
    is set. ``relax_endpoints`` is the flag declared in the file (JSON only).
    """
    source: str
    points: Optional[List[Point]] = None
    values: Optional[RealSeq] = None
    relax_endpoints: bool = False

    def point_seq(self, relax_endpoints: bool = False) -> PointSeq:
        """Build the :py:class:`PointSeq`, relaxing the end points if either
        the file or the caller asks for it."""
        if self.points is None:
            raise ParseError('File contains no points.', source=self.source)
        return PointSeq(self.points, relax_endpoints=relax_endpoints or self.relax_endpoints)


def infer_format(path: str, fmt: Optional[str] = None) -> str:
    if fmt is not None:
        if fmt not in FORMATS:
            raise ParseError(f'Unknown format {fmt!r}, expected one of {", ".join(FORMATS)}.')
        return fmt
    ext = os.path.splitext(path)[1].lower().lstrip('.')
    if ext not in FORMATS:
        raise ParseError(
            f'Cannot infer the format from extension {ext!r}. Use --format csv|json.',
            source=path)
    return ext


def _scalar(value: Any, source: str, line: Optional[int] = None,
            column: Optional[int] = None, where: str = ''):
    try:
        return as_scalar(value)
    except ParseError as e:
        where = f' in {where}' if where else ''
        raise type(e)(f'{e}{where}', line=line, column=column, source=source) from None


def _csv_rows(path: str):
    """Yield ``(line_number, fields)`` of the non-empty, non-comment rows."""
    with open(path, newline='', encoding='utf-8') as f:
        reader = csv.reader(f)
        for row in reader:
            fields = [field.strip() for field in row]
            if not any(fields) or fields[0].startswith('#'):
                continue
            yield reader.line_num, fields


def _is_header(fields: Sequence[str], names: Sequence[str]) -> bool:
    return [f.lower() for f in fields] == list(names)


def read_points_csv(path: str) -> InstanceFile:
    points = []
    for k, (line, fields) in enumerate(_csv_rows(path)):
        if k == 0 and _is_header(fields, ('x', 'y')):
            continue
        if len(fields) != 2:
            raise ParseError(f'Expected 2 fields "x,y", got {len(fields)}.',
                             line=line, column=min(len(fields) + 1, 3), source=path)
        x = _scalar(fields[0], path, line, 1)
        y = _scalar(fields[1], path, line, 2)
        points.append(Point(x, y))
    return InstanceFile(source=path, points=points)


def read_sequence_csv(path: str) -> InstanceFile:
    values = []
    for k, (line, fields) in enumerate(_csv_rows(path)):
        if k == 0 and len(fields) == 1 and fields[0].lower() in ('u', 'value', 'values'):
            continue
        for column, field in enumerate(fields, start=1):
            values.append(_scalar(field, path, line, column))
    if not values:
        raise ParseError('Sequence file contains no values.', source=path)
    return InstanceFile(source=path, values=RealSeq(values))


def _load_json(path: str) -> Any:
    with open(path, encoding='utf-8') as f:
        try:
            return json.load(f, parse_float=Decimal)
        except json.JSONDecodeError as e:
            raise ParseError(e.msg, line=e.lineno, column=e.colno, source=path) from None


def _relax_flag(doc: Any, path: str) -> bool:
    if not isinstance(doc, dict):
        return False
    relax = doc.get('relax_endpoints', False)
    if not isinstance(relax, bool):
        raise ParseError(f'"relax_endpoints" must be true or false, got {relax!r}.', source=path)
    return relax


def read_points_json(path: str) -> InstanceFile:
    doc = _load_json(path)
    items = doc.get('points') if isinstance(doc, dict) else doc
    if not isinstance(items, list):
        raise ParseError('Expected {"points": [["x", "y"], ...]} or a list of pairs.', source=path)
    points = []
    for i, item in enumerate(items):
        if not isinstance(item, list) or len(item) != 2:
            raise ParseError(f'points[{i}] must be a pair ["x", "y"], got {item!r}.', source=path)
        x = _scalar(item[0], path, where=f'points[{i}][0]')
        y = _scalar(item[1], path, where=f'points[{i}][1]')
        points.append(Point(x, y))
    return InstanceFile(source=path, points=points, relax_endpoints=_relax_flag(doc, path))


def read_sequence_json(path: str) -> InstanceFile:
    doc = _load_json(path)
    items = doc.get('values') if isinstance(doc, dict) else doc
    if not isinstance(items, list) or not items:
        raise ParseError('Expected {"values": ["v1", ...]} or a non-empty list.', source=path)
    values = [_scalar(v, path, where=f'values[{i}]') for i, v in enumerate(items)]
    return InstanceFile(source=path, values=RealSeq(values))


def read_points(path: str, fmt: Optional[str] = None) -> InstanceFile:
    """Read a point file.

    Args:
        path: File to read.
        fmt: ``'csv'`` or ``'json'``; inferred from the extension if ``None``.

    Raises:
        ParseError: If the file is malformed.
        OSError: If the file cannot be read.
    """
    if infer_format(path, fmt) == 'csv':
        return read_points_csv(path)
    return read_points_json(path)


def read_sequence(path: str, fmt: Optional[str] = None) -> InstanceFile:
    """Read a sequence file (same conventions as :py:func:`read_points`)."""
    if infer_format(path, fmt) == 'csv':
        return read_sequence_csv(path)
    return read_sequence_json(path)


def dumps(obj: Any) -> str:
    """Deterministic JSON text (key order as given, one trailing newline)."""
    return json.dumps(obj, ensure_ascii=True) + '\n'

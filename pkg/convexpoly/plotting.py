# convexpoly - exact convex polygon and convex sequence toolkit

"""Static SVG plots of a point sequence, its chord and the chord half-space.

Exact coordinates are converted to floats here and only here; nothing that
is computed from the plot feeds back into a verdict.
"""

import io
import logging
from typing import Optional, Tuple

import matplotlib
import numpy as np
from matplotlib.backends.backend_svg import FigureCanvasSVG
from matplotlib.figure import Figure
from matplotlib.lines import Line2D
from matplotlib.patches import Polygon

from convexpoly.geometry.polygon import PointSeq, PolygonVerdict, VerdictKind, classify

logger = logging.getLogger('convexpolylog')

# Fixed salt and no timestamp: identical input gives byte-identical files
SVG_RC = {
    'svg.hashsalt': 'convexpoly',
    'svg.fonttype': 'none',
    'path.simplify': False,
}

EDGE_COLOR = '#1f77b4'
CHORD_COLOR = '#444444'
BAND_COLOR = '#2ca02c'
WITNESS_COLOR = '#d62728'


def _view_limits(xs: np.ndarray, ys: np.ndarray, margin: float = 0.15
                 ) -> Tuple[float, float, float, float]:
    span_x = max(xs.max() - xs.min(), 1.0)
    span_y = max(ys.max() - ys.min(), 1.0)
    return (xs.min() - margin * span_x, xs.max() + margin * span_x,
            ys.min() - margin * span_y, ys.max() + margin * span_y)


def half_space_band(
        p: PointSeq,
        below: bool,
        limits: Tuple[float, float, float, float],
) -> np.ndarray:
    """Corners of the visible part of the closed half-plane below (or above)
    the chord line ``P_1 P_n``."""
    x_lo, x_hi, y_lo, y_hi = limits
    x1, y1 = float(p.first.x), float(p.first.y)
    slope = float((p.last.y - p.first.y) / (p.last.x - p.first.x))
    y_at_lo = y1 + slope * (x_lo - x1)
    y_at_hi = y1 + slope * (x_hi - x1)
    # Reach past the view so the axes clip hides the outer edge
    far = (y_hi - y_lo) + abs(y_at_lo - y_at_hi)
    edge = min(y_lo, y_at_lo, y_at_hi) - far if below else max(y_hi, y_at_lo, y_at_hi) + far
    return np.array([(x_lo, y_at_lo), (x_hi, y_at_hi), (x_hi, edge), (x_lo, edge)])


def draw_point_seq(fig: Figure, p: PointSeq, verdict: PolygonVerdict) -> None:
    """Draw polygon edges, dashed chord, shaded half-space, vertices and
    labels of ``p`` on a new axes of ``fig``."""
    ax = fig.add_subplot(1, 1, 1)
    xs = np.array([float(q.x) for q in p])
    ys = np.array([float(q.y) for q in p])
    limits = _view_limits(xs, ys)
    n = len(p)

    below = verdict.kind is not VerdictKind.CONVEX_ABOVE_CHORD
    band = Polygon(half_space_band(p, below, limits), closed=True, facecolor=BAND_COLOR,
                   alpha=0.15, edgecolor='none', zorder=0)
    band.set_gid('half-space-below' if below else 'half-space-above')
    ax.add_patch(band)

    for i in range(n):
        j = (i + 1) % n
        edge = Line2D([xs[i], xs[j]], [ys[i], ys[j]], color=EDGE_COLOR, linewidth=1.5, zorder=2)
        edge.set_gid(f'polygon-edge-{i + 1}')
        ax.add_line(edge)

    chord = Line2D([xs[0], xs[-1]], [ys[0], ys[-1]], color=CHORD_COLOR, linestyle='--',
                   linewidth=1.0, zorder=3)
    chord.set_gid('chord')
    ax.add_line(chord)

    for i in range(n):
        vertex, = ax.plot([xs[i]], [ys[i]], marker='o', markersize=5, color='black',
                          linestyle='none', zorder=4)
        vertex.set_gid(f'vertex-{i + 1}')
        label = ax.annotate(f'P{i + 1}', (xs[i], ys[i]), textcoords='offset points',
                            xytext=(4, 4), fontsize=9)
        label.set_gid(f'vertex-label-{i + 1}')

    if verdict.witness is not None:
        k = verdict.witness - 1
        witness, = ax.plot([xs[k]], [ys[k]], marker='o', markersize=11, markerfacecolor='none',
                           markeredgecolor=WITNESS_COLOR, markeredgewidth=2, linestyle='none',
                           zorder=5)
        witness.set_gid('witness')

    title = verdict.kind.value + (' (strict)' if verdict.strict else '')
    ax.set_title(title)
    ax.set_xlim(limits[0], limits[1])
    ax.set_ylim(limits[2], limits[3])
    ax.grid(True, linewidth=0.3)


def render_svg(p: PointSeq, verdict: Optional[PolygonVerdict] = None) -> str:
    """SVG document of ``p`` (classified with :py:func:`classify` unless a
    verdict is given)."""
    verdict = classify(p) if verdict is None else verdict
    with matplotlib.rc_context(SVG_RC):
        fig = Figure(figsize=(6, 6))
        FigureCanvasSVG(fig)
        draw_point_seq(fig, p, verdict)
        buf = io.StringIO()
        fig.savefig(buf, format='svg', metadata={'Date': None})
    logger.debug(f'Rendered {verdict.kind.value} instance with {len(p)} points')
    return buf.getvalue()


def write_svg(p: PointSeq, path: str, verdict: Optional[PolygonVerdict] = None) -> None:
    """Write :py:func:`render_svg` output to ``path``.

    Raises:
        OSError: If ``path`` cannot be written.
    """
    svg = render_svg(p, verdict)
    with open(path, 'w', encoding='utf-8') as f:
        f.write(svg)

from .polygon import (
    Point, PointSeq, SlopeProfile, PolygonVerdict, VerdictKind, Side, Theorem,
    HypothesisReport, slope_profile, classify, chord_side, check_hypotheses,
    slope_inequality_from_hypotheses, slope_inequality_witness, mirror
)
from .plfunction import (
    PLFunction, SegmentSide, evaluate, is_convex_function, epigraph_contains,
    hypograph_contains, chord_slope, segment_slope, region_contains
)
from .oracle import (
    Orientation, orient, oracle_classify, convex_hull, hull_cross_check,
    polygon_contains
)

# -*- coding: utf-8 -*-
# convexpoly - exact convex polygon and convex sequence toolkit

import logging

from convexpoly.logger import logger_setup

logger = logging.getLogger('convexpolylog')

logger_setup()

from convexpoly.exceptions import (  # noqa: E402
    ConvexPolyError, ParseError, PreconditionViolated, InvalidPointSeq, OracleInconsistency,
)
from convexpoly.scalar import Ordering, Scalar, as_scalar, parse_scalar, render_scalar  # noqa: E402
from convexpoly.sequences import (  # noqa: E402
    RatioList, RealSeq, SeqReport, MeanKind, analyze_sequence, check_pivot, differences,
    find_pivot, is_convex_by_differences, mean_bounds, mediant_bounds, merge_mediant,
)
from convexpoly.geometry import (  # noqa: E402
    Point, PointSeq, PolygonVerdict, VerdictKind, classify, oracle_classify,
)

# convexpoly - exact convex polygon and convex sequence toolkit

"""``convexpoly`` command line interface.

Commands::

    convexpoly classify points.csv [--oracle]
    convexpoly sequence values.json [--pivot] [--mean arithmetic|harmonic]
    convexpoly verify --seed 42 --instances 10000 [--workers 4] [--dump bad.json]
    convexpoly plot points.csv --svg out.svg

Results are written as JSON to standard output (or ``--output``), log
messages go to standard error. Exit codes: 0 on success, 1 if a
verification found a disagreement, 2 for usage and input errors.
"""

import argparse
import logging
import sys
from typing import List, Optional

from convexpoly import io
from convexpoly.exceptions import ConvexPolyError, OracleInconsistency
from convexpoly.geometry.oracle import hull_cross_check, oracle_classify
from convexpoly.geometry.polygon import classify, slope_profile
from convexpoly.logger import logger_setup
from convexpoly.plotting import render_svg, write_svg
from convexpoly.scalar import render_scalar
from convexpoly.sequences import MeanKind, analyze_sequence, find_pivot, mean_bounds
from convexpoly.verification.fuzz import FuzzConfig, MODES, dump_instance, run_verification

logger = logging.getLogger('convexpolylog')

EXIT_OK = 0
EXIT_DISAGREEMENT = 1
EXIT_INPUT_ERROR = 2


def _emit(text: str, output: Optional[str]) -> None:
    if output is None:
        sys.stdout.write(text)
        sys.stdout.flush()
    else:
        with open(output, 'w', encoding='utf-8') as f:
            f.write(text)


def cmd_classify(args: argparse.Namespace) -> int:
    p = io.read_points(args.file, args.format).point_seq(args.relax_endpoints)
    verdict = classify(p)
    result = verdict.to_dict()
    result['slopes'] = slope_profile(p).rendered_slopes()
    status = EXIT_OK
    if args.oracle:
        try:
            oracle = oracle_classify(p)
        except OracleInconsistency as e:
            logger.error(str(e))
            oracle = None
        hull_agrees = hull_cross_check(p, verdict)
        agrees = (oracle is not None and oracle.kind is verdict.kind
                  and oracle.strict == verdict.strict and hull_agrees)
        result['oracle'] = None if oracle is None else oracle.to_dict()
        result['hull_agrees'] = hull_agrees
        result['agrees'] = agrees
        if not agrees:
            logger.error(f'classify and the oracle disagree on {p}')
            status = EXIT_DISAGREEMENT
    _emit(io.dumps(result), args.output)
    return status


def cmd_sequence(args: argparse.Namespace) -> int:
    u = io.read_sequence(args.file, args.format).values
    report = analyze_sequence(u)
    result = report.to_dict()
    if args.pivot:
        if report.is_convex:
            result['pivot'] = find_pivot(u)
        else:
            logger.warning('The sequence is not convex, so it has no pivot.')
            result['pivot'] = None
    if args.mean is not None:
        lo, mid, hi = mean_bounds(u, args.mean)
        result['mean'] = {
            'kind': args.mean,
            'min': render_scalar(lo),
            'mean': render_scalar(mid),
            'max': render_scalar(hi),
        }
    _emit(io.dumps(result), args.output)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    config = FuzzConfig(
        seed=args.seed,
        instances=args.instances,
        n_min=args.n_min,
        n_max=args.n_max,
        coord_range=args.coord_range,
        mode=args.mode,
        workers=args.workers,
    ).validate()
    report = run_verification(config, progress=not args.quiet)
    _emit(io.dumps(report.summary()), args.output)
    if report.ok:
        return EXIT_OK
    dump = io.dumps(dump_instance(report.first_disagreement, config))
    if args.dump is None:
        sys.stderr.write(dump)
    else:
        with open(args.dump, 'w', encoding='utf-8') as f:
            f.write(dump)
        logger.info(f'Wrote instance {report.first_disagreement.index} to {args.dump}')
    return EXIT_DISAGREEMENT


def cmd_plot(args: argparse.Namespace) -> int:
    p = io.read_points(args.file, args.format).point_seq(args.relax_endpoints)
    if args.svg is not None:
        write_svg(p, args.svg)
        logger.info(f'Wrote {args.svg}')
    else:
        _emit(render_svg(p), args.output)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('-o', '--output', default=None,
                        help='Write the result to this file instead of standard output.')
    verbosity = common.add_mutually_exclusive_group()
    verbosity.add_argument('-v', '--verbose', action='store_true', help='Log debug messages.')
    verbosity.add_argument('-q', '--quiet', action='store_true',
                           help='Only log warnings and errors, hide progress bars.')
    common.add_argument('--log-file', default=None, help='Also write the log to this file.')

    infile = argparse.ArgumentParser(add_help=False)
    infile.add_argument('file', help='Input file (.csv or .json).')
    infile.add_argument('--format', choices=io.FORMATS, default=None,
                        help='Input format. Default: inferred from the file extension.')

    points = argparse.ArgumentParser(add_help=False)
    points.add_argument('--relax-endpoints', action='store_true',
                        help='Allow x_1 = x_2 and x_(n-1) = x_n.')

    parser = argparse.ArgumentParser(
        prog='convexpoly',
        description='Exact convexity tests for x-sorted point sequences and real sequences.')
    sub = parser.add_subparsers(dest='command', metavar='COMMAND')
    sub.required = True

    p = sub.add_parser('classify', parents=[common, infile, points],
                       help='Classify a point sequence by slope monotonicity.')
    p.add_argument('--oracle', action='store_true',
                   help='Also run the orientation oracle and the hull check. '
                        'Exits with 1 if they disagree.')
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser('sequence', parents=[common, infile],
                       help='Convexity and monotonicity report of a sequence.')
    p.add_argument('--pivot', action='store_true', help='Add the smallest pivot index.')
    p.add_argument('--mean', choices=[k.value for k in MeanKind], default=None,
                   help='Add min <= mean <= max bounds.')
    p.set_defaults(func=cmd_sequence)

    p = sub.add_parser('verify', parents=[common],
                       help='Seeded comparison of classify with the geometric oracle.')
    defaults = FuzzConfig()
    p.add_argument('--seed', type=int, default=defaults.seed)
    p.add_argument('--instances', type=int, default=defaults.instances)
    p.add_argument('--n-min', type=int, default=defaults.n_min)
    p.add_argument('--n-max', type=int, default=defaults.n_max)
    p.add_argument('--coord-range', type=int, default=defaults.coord_range,
                   help='Coordinates are drawn from [-R, R].')
    p.add_argument('--mode', choices=MODES, default=defaults.mode)
    p.add_argument('--workers', type=int, default=defaults.workers,
                   help='Number of worker processes.')
    p.add_argument('--dump', default=None,
                   help='Write the first disagreeing instance here (default: standard error).')
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser('plot', parents=[common, infile, points],
                       help='Render polygon, chord and chord half-space as SVG.')
    p.add_argument('--svg', default=None, help='SVG output path (default: --output or stdout).')
    p.set_defaults(func=cmd_plot)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code in (0, None) else EXIT_INPUT_ERROR

    if args.verbose:
        level = logging.DEBUG
    elif args.quiet:
        level = logging.WARNING
    else:
        level = logging.INFO
    logger_setup(stream_level=level, log_file=args.log_file)

    try:
        return args.func(args)
    except (ConvexPolyError, ValueError, OSError) as e:
        logger.error(str(e))
        return EXIT_INPUT_ERROR


if __name__ == '__main__':
    sys.exit(main())

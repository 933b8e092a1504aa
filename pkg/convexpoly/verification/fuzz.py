# convexpoly - exact convex polygon and convex sequence toolkit

"""Seeded verification runs of the slope classifier against the oracle.

Every instance is generated from ``(seed, index)`` alone, checked by
:py:func:`check_instance` and reduced to a small :py:class:`InstanceResult`.
Results can be produced by several worker processes; only their counts and
the disagreement with the smallest index are aggregated, so the report does
not depend on the worker layout.
"""

import logging
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Dict, Iterator, List, Optional, Tuple

from tqdm import tqdm

from convexpoly.exceptions import ConfigError, OracleInconsistency
from convexpoly.geometry.oracle import hull_cross_check, oracle_classify
from convexpoly.geometry.polygon import (
    PointSeq, PolygonVerdict, Theorem, VerdictKind, check_hypotheses, classify,
    slope_inequality_witness,
)
from convexpoly.scalar import render_scalar
from convexpoly.verification import generators
from convexpoly.verification.random import instance_rng

logger = logging.getLogger('convexpolylog')

BASE_MODES = ('mixed', 'convex-only', 'relaxed')
HYPOTHESIS_PREFIX = 'hypothesis:'
MODES = BASE_MODES + tuple(HYPOTHESIS_PREFIX + t.value for t in Theorem)


class Timer:
    def __init__(self):
        self.origin = time.time()

    @property
    def t_passed(self) -> float:
        return time.time() - self.origin


def pretty_string_time(t: float) -> str:
    """Custom printing of elapsed time"""
    if t > 4000:
        s = 't=%.1fh' % (t / 3600)
    elif t > 300:
        s = 't=%.0fm' % (t / 60)
    else:
        s = 't=%.1fs' % t
    return s


@dataclass(frozen=True)
class FuzzConfig:
    """Parameters of a verification run.

    Args:
        seed: Run seed (unsigned 64-bit). Instance ``k`` is generated from
            ``(seed, k)`` only.
        instances: Number of instances to generate.
        n_min: Smallest vertex count (at least 3).
        n_max: Largest vertex count.
        coord_range: Coordinates are drawn from ``[-coord_range, coord_range]``.
        mode: ``mixed``, ``convex-only``, ``relaxed`` (``x_1 = x_2``
            instances) or ``hypothesis:<Theorem>`` (e.g. ``hypothesis:Thm15``).
        workers: Number of worker processes. ``1`` runs in-process.
    """
    seed: int = 0
    instances: int = 1000
    n_min: int = 3
    n_max: int = 12
    coord_range: int = 50
    mode: str = 'mixed'
    workers: int = 1

    def validate(self) -> 'FuzzConfig':
        if not 0 <= self.seed < 2 ** 64:
            raise ConfigError(f'seed must be an unsigned 64-bit integer, got {self.seed}.')
        if self.instances < 1:
            raise ConfigError(f'instances must be at least 1, got {self.instances}.')
        if self.n_min < 3:
            raise ConfigError(f'n_min must be at least 3, got {self.n_min}.')
        if self.n_max < self.n_min:
            raise ConfigError(f'n_max ({self.n_max}) must not be smaller than n_min ({self.n_min}).')
        if self.coord_range < 1:
            raise ConfigError(f'coord_range must be at least 1, got {self.coord_range}.')
        if self.workers < 1:
            raise ConfigError(f'workers must be at least 1, got {self.workers}.')
        if self.mode not in MODES:
            raise ConfigError(f'Unknown mode {self.mode!r}. Choose one of {", ".join(MODES)}.')
        if self.theorem is None and 2 * self.coord_range + 1 < self.n_max:
            raise ConfigError(
                f'coord_range {self.coord_range} has too few distinct integer x '
                f'values for n_max = {self.n_max}.')
        return self

    @property
    def theorem(self) -> Optional[Theorem]:
        if self.mode.startswith(HYPOTHESIS_PREFIX):
            return Theorem(self.mode[len(HYPOTHESIS_PREFIX):])
        return None


def generate_instance(config: FuzzConfig, index: int) -> PointSeq:
    """Instance ``index`` of the run described by ``config``."""
    rng = instance_rng(config.seed, index)
    n = int(rng.integers(config.n_min, config.n_max + 1))
    theorem = config.theorem
    if theorem is not None:
        return generators.hypothesis_point_seq(rng, theorem, n, config.coord_range)
    if config.mode == 'convex-only':
        return generators.convex_point_seq(rng, n, config.coord_range)
    if config.mode == 'relaxed':
        return generators.relaxed_point_seq(rng, n, config.coord_range)
    return generators.mixed_point_seq(rng, n, config.coord_range)


@dataclass(frozen=True)
class InstanceResult:
    index: int
    points: Tuple[Tuple[str, str], ...]
    relax_endpoints: bool
    verdict: Optional[dict]
    oracle: Optional[dict]
    reasons: Tuple[str, ...] = ()

    @property
    def agrees(self) -> bool:
        return not self.reasons


def compare_verdicts(
        p: PointSeq,
        theorem: Optional[Theorem] = None,
) -> Tuple[PolygonVerdict, Optional[PolygonVerdict], List[str]]:
    """Run every check on one instance.

    Returns:
        ``(verdict, oracle_verdict, reasons)``; ``reasons`` is empty iff all
        checks agree. ``oracle_verdict`` is ``None`` if the oracle itself
        reported an inconsistency.
    """
    reasons = []
    verdict = classify(p)
    try:
        oracle = oracle_classify(p)
    except OracleInconsistency as e:
        logger.debug(str(e))
        oracle = None
        reasons.append('oracle_inconsistent')
    if oracle is not None:
        if oracle.kind is not verdict.kind:
            reasons.append('kind')
        elif oracle.strict != verdict.strict:
            reasons.append('strict')
    if not hull_cross_check(p, verdict):
        reasons.append('hull')
    if theorem is not None:
        reasons.extend(_theorem_reasons(p, verdict, theorem))
    return verdict, oracle, reasons


def _theorem_reasons(p: PointSeq, verdict: PolygonVerdict, theorem: Theorem) -> List[str]:
    reasons = []
    if not check_hypotheses(p.xs, p.ys, theorem).satisfied:
        # Generator bug: the instance was supposed to satisfy the hypotheses
        reasons.append('hypotheses_not_satisfied')
    if verdict.kind not in (VerdictKind.CONVEX_BELOW_CHORD, VerdictKind.DEGENERATE_COLLINEAR):
        reasons.append('conclusion')
    if slope_inequality_witness(p.xs, p.ys) is not None:
        reasons.append('slope_inequality')
    return reasons


def check_instance(config: FuzzConfig, index: int) -> InstanceResult:
    p = generate_instance(config, index)
    verdict, oracle, reasons = compare_verdicts(p, config.theorem)
    return InstanceResult(
        index=index,
        points=tuple((render_scalar(q.x), render_scalar(q.y)) for q in p),
        relax_endpoints=p.relax_endpoints,
        verdict=verdict.to_dict(),
        oracle=None if oracle is None else oracle.to_dict(),
        reasons=tuple(reasons),
    )


def _check_chunk(config: FuzzConfig, indices: range) -> List[InstanceResult]:
    return [check_instance(config, i) for i in indices]


def _chunks(instances: int, workers: int) -> List[range]:
    size = max(1, min(1000, instances // (4 * workers) or 1))
    return [range(lo, min(lo + size, instances)) for lo in range(0, instances, size)]


def iter_results(config: FuzzConfig) -> Iterator[List[InstanceResult]]:
    """Yield results chunk by chunk, in index order."""
    chunks = _chunks(config.instances, config.workers)
    if config.workers == 1:
        for chunk in chunks:
            yield _check_chunk(config, chunk)
        return
    with ProcessPoolExecutor(max_workers=config.workers) as executor:
        futures = [executor.submit(_check_chunk, config, chunk) for chunk in chunks]
        for future in futures:
            yield future.result()


@dataclass
class VerificationReport:
    config: FuzzConfig
    instances: int = 0
    agreements: int = 0
    disagreements: int = 0
    elapsed: float = 0.0
    first_disagreement: Optional[InstanceResult] = None
    reason_counts: Dict[str, int] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.disagreements == 0

    def add(self, result: InstanceResult) -> None:
        self.instances += 1
        if result.agrees:
            self.agreements += 1
            return
        self.disagreements += 1
        for reason in result.reasons:
            self.reason_counts[reason] = self.reason_counts.get(reason, 0) + 1
        first = self.first_disagreement
        if first is None or result.index < first.index:
            self.first_disagreement = result

    def summary(self) -> dict:
        return {
            'instances': self.instances,
            'agreements': self.agreements,
            'disagreements': self.disagreements,
            'seed': self.config.seed,
        }


def run_verification(
        config: FuzzConfig,
        progress: bool = True,
        on_result: Optional[Callable[[InstanceResult], None]] = None,
) -> VerificationReport:
    """Generate and check ``config.instances`` instances.

    Args:
        config: Run parameters. Validated before anything is generated.
        progress: Show a ``tqdm`` progress bar on standard error.
        on_result: Optional callback, called with every result.

    Raises:
        ConfigError: If ``config`` is invalid.
    """
    config.validate()
    timer = Timer()
    report = VerificationReport(config)
    logger.info(
        f'Verifying {config.instances} instances (mode {config.mode}, seed {config.seed}, '
        f'n in [{config.n_min}, {config.n_max}], R = {config.coord_range}, '
        f'{config.workers} worker(s))')
    pbar = tqdm(total=config.instances, desc='Verifying', file=sys.stderr,
                disable=not progress, dynamic_ncols=True)
    with pbar:
        for chunk in iter_results(config):
            for result in chunk:
                report.add(result)
                if not result.agrees:
                    logger.error(
                        f'Instance {result.index} disagrees ({", ".join(result.reasons)}): '
                        f'classify {result.verdict}, oracle {result.oracle}')
                if on_result is not None:
                    on_result(result)
            pbar.update(len(chunk))
            pbar.set_postfix(disagreements=report.disagreements)
    report.elapsed = timer.t_passed
    logger.info(
        f'{report.agreements}/{report.instances} instances agree '
        f'({pretty_string_time(report.elapsed)})')
    return report


def dump_instance(result: InstanceResult, config: FuzzConfig) -> dict:
    """Replayable JSON document for ``result`` (readable by the ``classify``
    command)."""
    return {
        'points': [list(q) for q in result.points],
        'relax_endpoints': result.relax_endpoints,
        'seed': config.seed,
        'index': result.index,
        'mode': config.mode,
        'reasons': list(result.reasons),
        'verdict': result.verdict,
        'oracle': result.oracle,
    }

# convexpoly - exact convex polygon and convex sequence toolkit

"""Random number generators for instance generation.

All draws are made from an explicit :py:class:`numpy.random.Generator`, so
that every instance of a verification run can be regenerated from the run
seed and the instance index alone (see :py:func:`instance_rng`).
"""

from typing import List, Optional, Tuple, Union

import numpy as np
import scipy.stats


def instance_rng(seed: int, index: int) -> np.random.Generator:
    """PCG64 generator for instance ``index`` of the run seeded with ``seed``.

    Child streams are keyed by ``(index,)``, so instances are independent of
    each other and of how they are distributed over worker processes.
    """
    return np.random.Generator(
        np.random.PCG64(np.random.SeedSequence(seed, spawn_key=(index,)))
    )


class RandomSampler:
    """Samples random variables from a ``scipy.stats`` distribution."""
    def __init__(
            self,
            rv: scipy.stats.rv_discrete,
            shape: Union[int, Tuple[int, ...]] = (),
    ):
        self.rv = rv
        self.shape = shape

    def __call__(self, rng: np.random.Generator, shape=None):
        shape = self.shape if shape is None else shape
        return self.rv.rvs(size=shape, random_state=rng)


class RandInt(RandomSampler):
    """Discrete uniform distribution sampler

    Outputs random integers in the closed range ``[low, high]`` with equal
    probability."""
    def __init__(
            self,
            low: int,
            high: int,
            shape: Union[int, Tuple[int, ...]] = (),
    ):
        if high < low:
            raise ValueError(f'Empty range [{low}, {high}].')
        self.low = low
        self.high = high
        rv = scipy.stats.randint(low=low, high=high + 1)
        super().__init__(rv=rv, shape=shape)

    def ints(self, rng: np.random.Generator, count: Optional[int] = None) -> List[int]:
        """Draw ``count`` values as Python ints (exact arithmetic downstream)."""
        count = self.shape if count is None else count
        return [int(v) for v in np.atleast_1d(self(rng, shape=count))]

    def one(self, rng: np.random.Generator) -> int:
        return int(self(rng, shape=()))


def distinct_ints(rng: np.random.Generator, low: int, high: int, count: int) -> List[int]:
    """``count`` distinct, sorted integers from ``[low, high]``."""
    if high - low + 1 < count:
        raise ValueError(f'[{low}, {high}] has fewer than {count} integers.')
    return sorted(int(v) for v in rng.choice(np.arange(low, high + 1), size=count, replace=False))

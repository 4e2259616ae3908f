"""
Multi-core and Distributed Evaluation
=====================================

The choice of the sampler determines in which way independent work items,
Monte-Carlo resamples or sweep grid points, are parallelized. Results are
identical for every sampler, since all randomness is keyed by item index.
"""

from .base import Sampler
from .singlecore import SingleCoreSampler
from .mapping import MappingSampler
from .multicore import MulticoreSampler
from .concurrent_future import ConcurrentFutureSampler
from .util import nr_cores_available

__all__ = ["Sampler",
           "SingleCoreSampler",
           "MappingSampler",
           "MulticoreSampler",
           "ConcurrentFutureSampler",
           "nr_cores_available",
           "sampler_for_workers"]


def sampler_for_workers(workers: int = None) -> Sampler:
    """
    A single core sampler for ``workers == 1``, a thread pool otherwise
    (``None`` or ``0`` meaning all available cores).
    """
    if workers == 1:
        return SingleCoreSampler()
    return MulticoreSampler(n_procs=workers or None)

"""
Monte-Carlo error bars
----------------------

Parametric bootstrap: every count is redrawn from a Poisson distribution
centered at the observed value and the full pipeline, reconstruction and
quantifier, is re-run on the resampled data. Count ``j`` of sample ``i``
draws from the substream keyed ``(j, i)``.
"""

from typing import Callable, Dict, List, Sequence, Union
import logging
import numpy as np

from ..sampler import Sampler, SingleCoreSampler
from .exceptions import MonteCarloError
from .records import CountRecord
from .rng import substream

logger = logging.getLogger("MonteCarlo")

Pipeline = Callable[[List[CountRecord]], Union[float, Dict[str, float]]]


class McEstimate:
    """
    Mean and sample standard deviation of a Monte-Carlo distribution.
    """

    def __init__(self, mean: float, std_dev: float, samples: int):
        if std_dev < 0:
            raise ValueError(f"Negative standard deviation {std_dev}.")
        if samples < 2:
            raise ValueError(f"Need at least two samples, got {samples}.")
        self.mean = float(mean)
        self.std_dev = float(std_dev)
        self.samples = int(samples)

    @classmethod
    def from_values(cls, values) -> "McEstimate":
        values = np.asarray(values, dtype=float)
        return cls(values.mean(), values.std(ddof=1), values.size)

    def to_dict(self) -> dict:
        return {"mean": self.mean, "std_dev": self.std_dev,
                "samples": self.samples}

    def __repr__(self):
        return f"<McEstimate {self.mean:.6g} +- {self.std_dev:.2g} " \
               f"(n={self.samples})>"


def resample(records: Sequence[CountRecord], seed: int, sample: int) \
        -> List[CountRecord]:
    """
    Poisson resample of ``records`` for Monte-Carlo sample ``sample``.
    """
    return [r.with_counts(int(substream(seed, j, sample).poisson(r.counts)))
            for j, r in enumerate(records)]


class _Resampled:
    """
    Runs the pipeline on one resample. A class rather than a closure so
    that process pools can pickle it.
    """

    def __init__(self, pipeline: Pipeline, records: List[CountRecord],
                 seed: int):
        self.pipeline = pipeline
        self.records = records
        self.seed = seed

    def __call__(self, sample: int):
        try:
            return self.pipeline(resample(self.records, self.seed, sample))
        except Exception as e:
            raise MonteCarloError(sample, e) from e


def monte_carlo_error(pipeline: Pipeline,
                      records: Sequence[CountRecord],
                      n_samples: int = 100,
                      seed: int = 0,
                      sampler: Sampler = None) \
        -> Union[McEstimate, Dict[str, McEstimate]]:
    """
    Error bars of the quantity ``pipeline(records)``.

    Parameters
    ----------
    pipeline: Callable
        Maps a list of count records to a float, or to a dict of floats
        with the same keys for every input.
    records: sequence of CountRecord
        The observed data.
    n_samples: int, optional (default = 100)
        Number of resamples, at least 2.
    seed: int, optional
        Seed of the resampling.
    sampler: Sampler, optional
        Distributes the resamples. Results do not depend on it.

    Returns
    -------
    estimate: McEstimate or Dict[str, McEstimate]

    Raises
    ------
    MonteCarloError
        If the pipeline fails on a resample; carries the sample index.
    """
    if n_samples < 2:
        raise ValueError(f"Need at least two samples, got {n_samples}.")
    sampler = sampler or SingleCoreSampler()
    values = sampler.map(_Resampled(pipeline, list(records), seed),
                         range(n_samples))
    logger.debug(f"Evaluated {n_samples} Monte-Carlo samples.")
    if isinstance(values[0], dict):
        return {key: McEstimate.from_values([v[key] for v in values])
                for key in values[0]}
    return McEstimate.from_values(values)

"""
Angle sweeps
------------

Ideal quantifiers are computed through the state, circuit, coherence and
discrimination modules; simulated quantifiers through count records,
reconstruction and Monte-Carlo error bars. Grid points are independent
and may be evaluated in parallel; records come back ordered by angle.
"""

from typing import List, Sequence
import logging
import numpy as np

from ..coherence import coherence_report
from ..config import ExperimentConfig
from ..discrimination import discriminate
from ..optics import DetectorAngle, detector_ensemble, target_state
from ..sampler import Sampler, SingleCoreSampler, sampler_for_workers
from ..tomo import derive_seed, monte_carlo_error
from .pipelines import (wave_records, particle_records, wave_pipeline,
                        particle_pipeline, N_PATHS)
from .records import SweepRecord

logger = logging.getLogger("Duality")

# substream keys of a grid point
WAVE_COUNTS = 0
PARTICLE_COUNTS = 1
WAVE_MC = 2
PARTICLE_MC = 3


def ideal_record(theta: float, n_paths: int = 2) -> SweepRecord:
    """
    Ideal quantifiers at ``theta``.
    """
    angle = DetectorAngle.of(theta)
    rho = target_state(angle, n_paths)
    report = coherence_report(rho, n_paths)
    result = discriminate(detector_ensemble(angle, n_paths))
    ideal = {"C": report.c_relent,
             "X": report.x,
             "H": result.mutual_info,
             "Ps": result.p_success,
             "P": result.p_success - 1 / n_paths}
    if n_paths == 2:
        ideal["V"] = 2 * abs(rho[0, 1])
        ideal["D"] = 2 * (result.p_success - 1 / 2)
    return SweepRecord(angle.theta, n_paths, ideal)


class _IdealPoint:
    def __init__(self, n_paths: int):
        self.n_paths = n_paths

    def __call__(self, theta: float) -> SweepRecord:
        return ideal_record(theta, self.n_paths)


def ideal_sweep(thetas: Sequence[float], n_paths: int = 2,
                sampler: Sampler = None) -> List[SweepRecord]:
    """
    Ideal records for every angle of ``thetas``, ordered by angle.
    """
    sampler = sampler or SingleCoreSampler()
    thetas = sorted(float(t) for t in thetas)
    return sampler.map(_IdealPoint(n_paths), thetas)


class _SimulatedPoint:
    def __init__(self, config: ExperimentConfig):
        self.config = config

    def __call__(self, index: int) -> SweepRecord:
        c = self.config
        theta = float(c.thetas[index])
        record = ideal_record(theta, N_PATHS)
        wave = wave_records(theta, c.flux, c.exposure,
                            derive_seed(c.seed, index, WAVE_COUNTS))
        particle = particle_records(
            theta, c.flux, c.exposure,
            derive_seed(c.seed, index, PARTICLE_COUNTS))
        simulated = {}
        simulated.update(monte_carlo_error(
            wave_pipeline, wave, c.mc_samples,
            derive_seed(c.seed, index, WAVE_MC)))
        simulated.update(monte_carlo_error(
            particle_pipeline, particle, c.mc_samples,
            derive_seed(c.seed, index, PARTICLE_MC)))
        record.simulated = simulated
        logger.info(f"theta={theta:g}: C={simulated['C'].mean:.4f}"
                    f"+-{simulated['C'].std_dev:.4f}, "
                    f"H={simulated['H'].mean:.4f}"
                    f"+-{simulated['H'].std_dev:.4f}")
        return record


def simulated_sweep(config: ExperimentConfig,
                    sampler: Sampler = None) -> List[SweepRecord]:
    """
    Records with ideal and simulated quantifiers over the grid of
    ``config``.

    Grid point ``k`` draws all its randomness from seeds derived from
    ``(config.seed, k)``, so the result depends on neither the sampler nor
    the number of workers.

    Raises
    ------
    ValueError
        For more than two paths; the simulated circuit has two.
    """
    if config.n_paths != N_PATHS:
        raise ValueError(f"The simulated experiment has {N_PATHS} paths, "
                         f"got n_paths={config.n_paths}.")
    sampler = sampler or sampler_for_workers(config.workers)
    order = np.argsort(config.thetas, kind="stable")
    logger.info(f"Simulating {len(order)} angles with "
                f"{config.mc_samples} Monte-Carlo samples each.")
    return sampler.map(_SimulatedPoint(config), [int(k) for k in order])

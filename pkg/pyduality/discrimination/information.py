"""
Path information
----------------

Success probability, the joint distribution of guessed and actual path,
and the mutual information between them.
"""

from typing import Sequence
import logging
import numpy as np

from ..qmath import shannon_entropy, random_projective_measurement
from ..sampler import Sampler, SingleCoreSampler
from ..tomo.rng import substream
from .helstrom import as_density, check_priors, helstrom_povm
from .povm import Povm
from .pretty_good import pretty_good_povm

logger = logging.getLogger("Discrimination")

PROBABILITY_CLAMP = 1e-12


def _ensemble(povm: Povm, states: Sequence, priors):
    rhos = [as_density(s) for s in states]
    if any(r.dim != povm.dim for r in rhos):
        raise ValueError("States and POVM differ in dimension.")
    if len(povm) != len(rhos):
        raise ValueError(f"{len(povm)} outcomes for {len(rhos)} states.")
    n = len(rhos)
    priors = check_priors(np.full(n, 1 / n) if priors is None else priors, n)
    return rhos, priors


def joint_distribution(povm: Povm, states: Sequence,
                       priors: Sequence = None) -> np.ndarray:
    """
    ``p_ij = p(M=i, D=j) = Tr(Pi_i rho_j) p_j``.

    Rows are measurement outcomes, columns the prepared states. Entries in
    ``[-1e-12, 0)`` are rounding artefacts and set to zero.
    """
    rhos, priors = _ensemble(povm, states, priors)
    joint = np.array([[rho.expectation(pi) * p
                       for rho, p in zip(rhos, priors)]
                      for pi in povm.elements])
    if np.any(joint < -PROBABILITY_CLAMP):
        raise ValueError(f"Negative joint probabilities {joint}.")
    return np.clip(joint, 0, None)


def success_probability(povm: Povm, states: Sequence,
                        priors: Sequence = None) -> float:
    """
    ``P_s = sum_i p_i Tr(Pi_i rho_i)``.
    """
    return float(np.trace(joint_distribution(povm, states, priors)))


def mutual_information(joint) -> float:
    """
    ``H(M:D) = H(M) + H(D) - H(M, D)`` in bits, from a joint table.
    """
    joint = np.asarray(joint, dtype=float)
    if joint.ndim != 2:
        raise ValueError(f"Joint table must be 2-D, got {joint.shape}.")
    if abs(joint.sum() - 1) > 1e-9:
        raise ValueError(f"Joint table sums to {joint.sum()}.")
    h = (shannon_entropy(joint.sum(axis=1))
         + shannon_entropy(joint.sum(axis=0))
         - shannon_entropy(joint))
    return max(h, 0.0)


class DiscriminationResult:
    """
    Outcome statistics of a path-discriminating measurement.

    Attributes
    ----------
    povm: Povm
        The measurement.
    p_success: float
        Probability that the outcome names the actual path.
    joint: np.ndarray
        ``joint[i, j] = p(M=i, D=j)``.
    h_d, h_m: float
        Entropies of the path and of the outcome distribution in bits.
    mutual_info: float
        ``H(M:D)`` in bits.
    """

    def __init__(self, povm: Povm, joint: np.ndarray):
        self.povm = povm
        self.joint = np.asarray(joint, dtype=float)
        self.p_success = float(np.trace(self.joint))
        self.h_m = shannon_entropy(self.joint.sum(axis=1))
        self.h_d = shannon_entropy(self.joint.sum(axis=0))
        self.mutual_info = mutual_information(self.joint)

    @property
    def priors(self) -> np.ndarray:
        return self.joint.sum(axis=0)

    @property
    def outcome_distribution(self) -> np.ndarray:
        return self.joint.sum(axis=1)

    def __repr__(self):
        return (f"<DiscriminationResult Ps={self.p_success:.6g} "
                f"H(M:D)={self.mutual_info:.6g}>")


def discriminate(states: Sequence, priors: Sequence = None,
                 povm: Povm = None) -> DiscriminationResult:
    """
    Discriminate ``states``.

    Without an explicit ``povm`` the Helstrom measurement is used for two
    states and the pretty-good measurement for more.
    """
    if povm is None:
        if len(states) == 2:
            povm = helstrom_povm(states[0], states[1],
                                 (0.5, 0.5) if priors is None else priors)
        else:
            povm = pretty_good_povm(states, priors)
    return DiscriminationResult(povm,
                                joint_distribution(povm, states, priors))


class _RandomTrial:
    def __init__(self, states, priors, seed):
        self.states = states
        self.priors = priors
        self.seed = seed

    def __call__(self, trial: int) -> float:
        dim = as_density(self.states[0]).dim
        povm = Povm(random_projective_measurement(
            dim, substream(self.seed, trial)))
        return success_probability(povm, self.states, self.priors)


def random_measurement_bound(states: Sequence, priors: Sequence = None,
                             n_trials: int = 1000, seed: int = 0,
                             sampler: Sampler = None) -> float:
    """
    Best success probability among ``n_trials`` Haar-random projective
    measurements, outcome ``i`` guessing state ``i``.

    Needs as many states as dimensions. Trial ``t`` draws from the
    substream keyed ``(t,)``, so the maximum does not depend on the
    sampler.
    """
    dim = as_density(states[0]).dim
    if len(states) != dim:
        raise ValueError(f"Random projective measurements of dimension "
                         f"{dim} cannot label {len(states)} states.")
    sampler = sampler or SingleCoreSampler()
    values = sampler.map(_RandomTrial(list(states), priors, seed),
                         range(n_trials))
    return float(max(values))

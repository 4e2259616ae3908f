"""
Random states and measurements
------------------------------

Haar-random unitaries and derived objects, used by optimality spot checks
and property tests.
"""

from typing import List, Union
import numpy as np
from scipy import stats as st

from .states import DensityMatrix


RandomState = Union[None, int, np.random.Generator]


def _generator(random_state: RandomState) -> np.random.Generator:
    if isinstance(random_state, np.random.Generator):
        return random_state
    return np.random.default_rng(random_state)


def random_unitary(dim: int, random_state: RandomState = None) \
        -> np.ndarray:
    """
    A Haar-distributed ``dim x dim`` unitary.
    """
    if dim == 1:
        phase = _generator(random_state).uniform(0, 2 * np.pi)
        return np.array([[np.exp(1j * phase)]])
    return st.unitary_group.rvs(dim, random_state=_generator(random_state))


def random_density_matrix(dim: int,
                          random_state: RandomState = None,
                          rank: int = None) -> DensityMatrix:
    """
    A random state from the induced (Ginibre) measure.

    Parameters
    ----------
    dim: int
        Hilbert space dimension.
    random_state: int or np.random.Generator, optional
        Seed or generator.
    rank: int, optional
        Rank of the state. Defaults to full rank.
    """
    rng = _generator(random_state)
    rank = dim if rank is None else rank
    g = (rng.standard_normal((dim, rank))
         + 1j * rng.standard_normal((dim, rank)))
    return DensityMatrix.from_operator(g @ g.conj().T)


def random_projective_measurement(dim: int,
                                  random_state: RandomState = None) \
        -> List[np.ndarray]:
    """
    Rank-one projectors onto the columns of a Haar-random unitary.
    """
    u = random_unitary(dim, random_state)
    return [np.outer(u[:, k], u[:, k].conj()) for k in range(dim)]

"""
Minimum-error discrimination of two states.
"""

from typing import Tuple, Union
import logging
import numpy as np

from ..qmath import DensityMatrix, PureState, eigh, DimensionMismatchError
from .povm import Povm

logger = logging.getLogger("Discrimination")

DEGENERACY_TOL = 1e-12

PLUS = np.array([1, 1], dtype=complex) / np.sqrt(2)
MINUS = np.array([1, -1], dtype=complex) / np.sqrt(2)

State = Union[PureState, DensityMatrix]


def as_density(state: State) -> DensityMatrix:
    if isinstance(state, DensityMatrix):
        return state
    if isinstance(state, PureState):
        return state.to_density()
    return DensityMatrix(state)


def check_priors(priors, n: int) -> np.ndarray:
    p = np.asarray(priors, dtype=float).reshape(-1)
    if p.size != n:
        raise ValueError(f"Expected {n} priors, got {p.size}.")
    if np.any(p < 0) or abs(p.sum() - 1) > 1e-12:
        raise ValueError(f"Priors {p} are not a probability vector.")
    return p


def helstrom_povm(eta1: State, eta2: State,
                  priors: Tuple[float, float] = (0.5, 0.5)) -> Povm:
    """
    The Helstrom measurement for two states.

    The first element projects onto the positive eigenspace of
    ``p_1 rho_1 - p_2 rho_2``, the second onto the rest. If that operator
    vanishes, no measurement does better than guessing; the fixed pair of
    projectors onto ``(|0> + |1>)/sqrt 2`` and its complement is returned
    and flagged as degenerate.

    Parameters
    ----------
    eta1, eta2: PureState or DensityMatrix
        The two states.
    priors: Tuple[float, float], optional
        Prior probabilities, equal by default.

    Returns
    -------
    povm: Povm
        Two projectors, labeled 1 and 2.
    """
    rho1, rho2 = as_density(eta1), as_density(eta2)
    if rho1.dim != rho2.dim:
        raise DimensionMismatchError(
            f"States of dimensions {rho1.dim} and {rho2.dim}.")
    p1, p2 = check_priors(priors, 2)
    gamma = p1 * rho1.matrix - p2 * rho2.matrix
    vals, vecs = eigh(gamma)
    dim = rho1.dim
    if np.max(np.abs(vals)) < DEGENERACY_TOL:
        logger.debug("Helstrom operator vanishes, states are "
                     "indistinguishable.")
        plus = np.zeros(dim, dtype=complex)
        plus[:2] = PLUS
        pi1 = np.outer(plus, plus.conj())
        return Povm([pi1, np.eye(dim) - pi1], degenerate=True)
    positive = vecs[:, vals > DEGENERACY_TOL]
    pi1 = positive @ positive.conj().T
    return Povm([pi1, np.eye(dim) - pi1])


def helstrom_success_probability(eta1: State, eta2: State,
                                 priors=(0.5, 0.5)) -> float:
    """
    The Helstrom bound ``(1 + || p_1 rho_1 - p_2 rho_2 ||_1) / 2``.
    """
    rho1, rho2 = as_density(eta1), as_density(eta2)
    p1, p2 = check_priors(priors, 2)
    vals, _ = eigh(p1 * rho1.matrix - p2 * rho2.matrix)
    return float((1 + np.sum(np.abs(vals))) / 2)

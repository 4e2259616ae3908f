"""
Square-root measurement for ensembles of more than two states.
"""

from typing import Sequence
import logging
import numpy as np

from ..qmath import eigh, DimensionMismatchError
from .helstrom import as_density, check_priors
from .povm import Povm

logger = logging.getLogger("Discrimination")

SUPPORT_TOL = 1e-12


def pretty_good_povm(states: Sequence, priors: Sequence = None) -> Povm:
    """
    The pretty-good (square-root) measurement
    ``Pi_i = rho^{-1/2} p_i rho_i rho^{-1/2}`` with
    ``rho = sum_i p_i rho_i``.

    The inverse square root is taken on the support of ``rho``. If the
    ensemble does not span the whole space, the projector onto the kernel
    is added to the first element so that the elements still sum to the
    identity, and the POVM is flagged.

    Parameters
    ----------
    states: sequence of PureState or DensityMatrix
        At least two states of common dimension.
    priors: sequence of float, optional
        Prior probabilities, uniform by default.
    """
    rhos = [as_density(s) for s in states]
    n = len(rhos)
    if n < 2:
        raise ValueError("Discrimination needs at least two states.")
    dim = rhos[0].dim
    if any(r.dim != dim for r in rhos):
        raise DimensionMismatchError("States differ in dimension.")
    priors = check_priors(np.full(n, 1 / n) if priors is None else priors, n)

    average = sum(p * r.matrix for p, r in zip(priors, rhos))
    vals, vecs = eigh(average)
    support = vals > SUPPORT_TOL
    inv_sqrt = ((vecs[:, support] / np.sqrt(vals[support]))
                @ vecs[:, support].conj().T)
    elements = [inv_sqrt @ (p * r.matrix) @ inv_sqrt
                for p, r in zip(priors, rhos)]
    singular = not np.all(support)
    if singular:
        kernel = vecs[:, ~support]
        elements[0] = elements[0] + kernel @ kernel.conj().T
        logger.warning(f"Ensemble spans {int(support.sum())} of {dim} "
                       f"dimensions; kernel assigned to the first outcome.")
    elements = [(e + e.conj().T) / 2 for e in elements]
    return Povm(elements, pseudo_inverse=singular)

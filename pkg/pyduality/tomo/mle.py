"""
Maximum-likelihood tomography
-----------------------------

Iterative fixed-point reconstruction of a density matrix from count
records. With exposure weighted measurement operators ``E_k = t_k Pi_k``,
``G = sum_k E_k`` and

.. math::

    R(\\rho) = \\sum_k \\frac{n_k}{\\mathrm{Tr}(E_k \\rho)} E_k,

one step maps :math:`\\rho \\mapsto G^{-1} R \\rho R G^{-1}`, normalized.
Operators need not sum to the identity and exposures may differ between
settings. If a full step would lower the likelihood, the step is diluted
to :math:`(1 - \\epsilon + \\epsilon A) \\rho (\\dots)^\\dagger` with
:math:`A = \\mathrm{Tr}(G \\rho) / N \\, G^{-1} R`, halving
:math:`\\epsilon` until the likelihood does not decrease.
"""

from typing import List, Sequence
import logging
import numpy as np

from ..qmath import DensityMatrix
from .exceptions import IncompleteTomographyError, EmptyCountsError
from .records import CountRecord

logger = logging.getLogger("Tomography")

MAX_ITERATIONS = 10_000
CONVERGENCE_TOL = 1e-10
MIN_DILUTION = 2 ** -30
PROBABILITY_FLOOR = 1e-300


class TomoResult:
    """
    Result of a reconstruction.

    Attributes
    ----------
    rho_hat: DensityMatrix
        The reconstructed state. Physical by construction.
    log_likelihood: float
        Final value of ``sum_k n_k log(Tr(E_k rho) / Tr(G rho))``.
    iterations: int
        Number of fixed-point steps taken.
    converged: bool
        Whether the maximum entry change dropped below the tolerance
        before the iteration cap.
    likelihood_trace: np.ndarray
        Log-likelihood before the first and after every step.
    """

    def __init__(self, rho_hat: DensityMatrix, log_likelihood: float,
                 iterations: int, converged: bool,
                 likelihood_trace: Sequence[float]):
        self.rho_hat = rho_hat
        self.log_likelihood = float(log_likelihood)
        self.iterations = int(iterations)
        self.converged = bool(converged)
        self.likelihood_trace = np.asarray(likelihood_trace, dtype=float)

    def __repr__(self):
        return (f"<TomoResult iterations={self.iterations} "
                f"converged={self.converged} "
                f"logL={self.log_likelihood:.6g}>")


def check_complete(projectors: Sequence[np.ndarray]) -> int:
    """
    Raise unless the operators span the whole operator space.

    Returns
    -------
    dim: int
        The Hilbert space dimension.
    """
    dims = {p.shape[0] for p in projectors}
    if len(dims) != 1:
        raise IncompleteTomographyError(
            f"Records mix operator dimensions {sorted(dims)}.")
    dim = dims.pop()
    rank = np.linalg.matrix_rank(
        np.array([p.reshape(-1) for p in projectors]), tol=1e-10)
    if rank < dim ** 2:
        raise IncompleteTomographyError(
            f"Settings span {rank} of {dim ** 2} operator dimensions; the "
            f"state is not determined.")
    return dim


def _log_likelihood(rho, ops, counts, g) -> float:
    probs = np.einsum("kij,ji->k", ops, rho).real
    norm = np.trace(g @ rho).real
    observed = counts > 0
    return float(np.sum(counts[observed] * np.log(
        np.maximum(probs[observed], PROBABILITY_FLOOR) / norm)))


def _r_operator(rho, ops, counts) -> np.ndarray:
    probs = np.einsum("kij,ji->k", ops, rho).real
    ratios = np.divide(counts, np.maximum(probs, PROBABILITY_FLOOR),
                       out=np.zeros_like(counts), where=counts > 0)
    return np.tensordot(ratios, ops, axes=1)


def _normalized(m: np.ndarray) -> np.ndarray:
    m = (m + m.conj().T) / 2
    return m / np.trace(m).real


def mle_reconstruct(records: Sequence[CountRecord],
                    max_iterations: int = MAX_ITERATIONS,
                    tol: float = CONVERGENCE_TOL) -> TomoResult:
    """
    Maximum-likelihood estimate of the state behind ``records``.

    Parameters
    ----------
    records: sequence of CountRecord
        Informationally complete set of settings.
    max_iterations: int, optional
        Iteration cap.
    tol: float, optional
        Stop once no matrix entry changes by more than ``tol``.

    Returns
    -------
    result: TomoResult

    Raises
    ------
    IncompleteTomographyError
        If the projectors do not determine the state.
    EmptyCountsError
        If no photon was registered at all.
    """
    records = list(records)
    if not records:
        raise IncompleteTomographyError("No count records.")
    dim = check_complete([r.projector for r in records])
    counts = np.array([r.counts for r in records], dtype=float)
    if counts.sum() <= 0:
        raise EmptyCountsError("All counts are zero.")
    ops = np.array([r.exposure * r.projector for r in records])
    g = ops.sum(axis=0)
    g_inv = np.linalg.inv(g)
    eye = np.eye(dim, dtype=complex)
    n_total = counts.sum()

    rho = eye / dim
    log_l = _log_likelihood(rho, ops, counts, g)
    trace: List[float] = [log_l]
    converged = False
    iterations = 0
    for iterations in range(1, max_iterations + 1):
        r = _r_operator(rho, ops, counts)
        candidate = _normalized(g_inv @ r @ rho @ r @ g_inv)
        candidate_l = _log_likelihood(candidate, ops, counts, g)
        slack = 1e-12 * max(1.0, abs(log_l))
        if candidate_l < log_l - slack:
            a = np.trace(g @ rho).real / n_total * (g_inv @ r)
            epsilon = 0.5
            while epsilon >= MIN_DILUTION:
                k = (1 - epsilon) * eye + epsilon * a
                candidate = _normalized(k @ rho @ k.conj().T)
                candidate_l = _log_likelihood(candidate, ops, counts, g)
                if candidate_l >= log_l - slack:
                    break
                epsilon /= 2
            else:
                logger.debug(f"Diluted step stalled at iteration "
                             f"{iterations}.")
                converged = True
                break
        change = np.max(np.abs(candidate - rho))
        rho, log_l = candidate, candidate_l
        trace.append(log_l)
        if change < tol:
            converged = True
            break

    if converged:
        logger.debug(f"Reconstruction converged after {iterations} "
                     f"iterations.")
    else:
        logger.warning(f"Reconstruction stopped at the iteration cap "
                       f"{max_iterations}.")
    return TomoResult(DensityMatrix.from_operator(rho), log_l, iterations,
                      converged, trace)

"""
Simulated photon counting
-------------------------

Counts are Poisson distributed with mean
``flux * exposure * Tr(Pi rho)``. Record ``j`` of a run draws from the
substream keyed ``(j,)`` of the run seed.
"""

from typing import List, Sequence
import numpy as np

from ..qmath import DensityMatrix, DimensionMismatchError, tensor
from .records import (CountRecord, check_projector, projector_for_label,
                      PAULI_LABELS)
from .rng import substream


def _check_rates(total_flux: float, exposure: float):
    if not total_flux > 0:
        raise ValueError(f"Flux must be positive, got {total_flux}.")
    if not exposure > 0:
        raise ValueError(f"Exposure must be positive, got {exposure}.")


def _means(state: DensityMatrix, operators: Sequence[np.ndarray],
           total_flux: float, exposure: float) -> np.ndarray:
    for op in operators:
        if op.shape[0] != state.dim:
            raise DimensionMismatchError(
                f"Operator of dimension {op.shape[0]} for a state of "
                f"dimension {state.dim}.")
    probabilities = np.array([state.expectation(op) for op in operators])
    return total_flux * exposure * np.clip(probabilities, 0, None)


def _draw(means: np.ndarray, seed: int, exact: bool) -> List[float]:
    if exact:
        return [float(m) for m in means]
    return [int(substream(seed, j).poisson(m)) for j, m in enumerate(means)]


def simulate_counts(state: DensityMatrix,
                    projectors: Sequence,
                    total_flux: float,
                    exposure: float,
                    seed: int,
                    labels: Sequence[str] = None,
                    branch: int = 1,
                    exact: bool = False) -> List[CountRecord]:
    """
    Simulate one count record per projector.

    Parameters
    ----------
    state: DensityMatrix
        The measured state.
    projectors: sequence of array_like
        Measurement operators with spectrum in [0, 1].
    total_flux: float
        Photons per second entering each measurement setting.
    exposure: float
        Exposure time per setting in seconds.
    seed: int
        Run seed; identical seeds give identical counts.
    labels: sequence of str, optional
        Setting labels. Default to ``"0", "1", ...``.
    branch: int, optional
        Branch recorded on every record.
    exact: bool, optional (default = False)
        Record the expected counts instead of Poisson draws.

    Returns
    -------
    records: List[CountRecord]
    """
    _check_rates(total_flux, exposure)
    operators = [check_projector(p) for p in projectors]
    if labels is None:
        labels = [str(j) for j in range(len(operators))]
    if len(labels) != len(operators):
        raise ValueError("Need one label per projector.")
    counts = _draw(_means(state, operators, total_flux, exposure),
                   seed, exact)
    return [CountRecord(label, op, n, exposure, branch)
            for label, op, n in zip(labels, operators, counts)]


def simulate_branch_counts(state: DensityMatrix,
                           total_flux: float,
                           exposure: float,
                           seed: int,
                           labels: Sequence[str] = PAULI_LABELS,
                           n_paths: int = 2,
                           exact: bool = False) -> List[CountRecord]:
    """
    Simulate polarization measurements behind each output path.

    For path ``j`` and setting ``L`` the count mean uses the operator
    ``|j><j| (x) Pi_L`` on the joint path (x) polarization state; the record
    stores the polarization projector ``Pi_L`` and branch ``j``.
    Records are ordered by branch, then by label.
    """
    _check_rates(total_flux, exposure)
    local = [projector_for_label(label) for label in labels]
    operators, meta = [], []
    for j in range(1, n_paths + 1):
        path = np.zeros((n_paths, n_paths))
        path[j - 1, j - 1] = 1
        for label, pi in zip(labels, local):
            operators.append(tensor(path, pi))
            meta.append((label, pi, j))
    counts = _draw(_means(state, operators, total_flux, exposure),
                   seed, exact)
    return [CountRecord(label, pi, n, exposure, j)
            for (label, pi, j), n in zip(meta, counts)]

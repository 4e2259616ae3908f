"""
Two-branch reconstruction
-------------------------

In the wave setting the circuit maps the path eigenbasis of the target
state onto the output paths, and each output path carries a known
polarization. The target state is recovered as the count-weighted sum of
the polarization states reconstructed behind each output path, with
polarization ``H, V`` read as path ``1, 2``.
"""

from typing import Dict, List, Sequence
import logging
import numpy as np

from ..qmath import DensityMatrix
from .exceptions import EmptyCountsError
from .mle import mle_reconstruct
from .records import CountRecord, total_counts

logger = logging.getLogger("Tomography")


def branch_weights(branch_records: Sequence[Sequence[CountRecord]]) \
        -> np.ndarray:
    """
    Relative total counts of each branch.
    """
    totals = np.array([total_counts(b) for b in branch_records])
    if totals.sum() <= 0:
        raise EmptyCountsError("All branches are empty.")
    return totals / totals.sum()


def weighted_two_branch_reconstruct(
        branch_records: Sequence[Sequence[CountRecord]],
        **mle_kwargs) -> DensityMatrix:
    """
    ``rho = w_1 rho_1 + w_2 rho_2`` from per-branch reconstructions.

    Parameters
    ----------
    branch_records: two sequences of CountRecord
        The polarization records behind output path 1 and output path 2.
    mle_kwargs:
        Passed on to :func:`mle_reconstruct`.

    Returns
    -------
    rho: DensityMatrix
        The reconstructed path state.

    .. note::
        A branch without any counts has weight zero and is skipped, with a
        warning. Both branches empty raises :class:`EmptyCountsError`.
    """
    branch_records = [list(b) for b in branch_records]
    if len(branch_records) != 2:
        raise ValueError(
            f"Expected two branches, got {len(branch_records)}.")
    weights = branch_weights(branch_records)
    combined = np.zeros((2, 2), dtype=complex)
    for branch, (weight, records) in enumerate(
            zip(weights, branch_records), start=1):
        if weight == 0:
            logger.warning(f"Branch {branch} registered no counts; "
                           f"skipped with weight 0.")
            continue
        result = mle_reconstruct(records, **mle_kwargs)
        combined += weight * result.rho_hat.matrix
    return DensityMatrix.from_operator(combined)


def group_branches(records: Sequence[CountRecord], n_branches: int = 2) \
        -> List[List[CountRecord]]:
    """
    Split a flat record list into branches ``1, ..., n_branches``.
    """
    grouped: Dict[int, List[CountRecord]] = {
        b: [] for b in range(1, n_branches + 1)}
    for r in records:
        if r.branch not in grouped:
            raise ValueError(f"Record {r} lies outside branches "
                             f"1..{n_branches}.")
        grouped[r.branch].append(r)
    return [grouped[b] for b in range(1, n_branches + 1)]

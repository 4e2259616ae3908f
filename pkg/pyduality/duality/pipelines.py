"""
Measurement pipelines
---------------------

The two settings of the experiment, from the detector angle to count
records and from count records to quantifiers.

* Wave setting: the circuit maps the target state onto the output paths;
  the polarization behind each path is measured in the six Pauli
  settings and the target state is recovered by the two-branch
  reconstruction. Yields ``C``, ``X`` and ``V``.
* Particle setting: the circuit is the identity; the polarization behind
  each path is measured in the Helstrom basis. The counts form the joint
  table of outcome and path. Yields ``H``, ``Ps``, ``P`` and ``D``.
"""

from typing import Dict, Sequence
import numpy as np

from ..coherence import coherence_report
from ..discrimination import mutual_information
from ..optics import CircuitMode, apply_circuit, joint_state
from ..qmath import DensityMatrix
from ..tomo import (CountRecord, EmptyCountsError, PAULI_LABELS,
                    DISCRIMINATION_LABELS, simulate_branch_counts,
                    weighted_two_branch_reconstruct, group_branches,
                    mle_reconstruct)

N_PATHS = 2


def output_state(theta: float, mode: CircuitMode) -> DensityMatrix:
    """
    The joint path (x) polarization state behind the circuit.
    """
    return apply_circuit(joint_state(theta), mode).to_density()


def wave_records(theta: float, flux: float, exposure: float, seed: int,
                 exact: bool = False):
    return simulate_branch_counts(
        output_state(theta, CircuitMode.WAVE), flux, exposure, seed,
        labels=PAULI_LABELS, n_paths=N_PATHS, exact=exact)


def particle_records(theta: float, flux: float, exposure: float, seed: int,
                     exact: bool = False):
    return simulate_branch_counts(
        output_state(theta, CircuitMode.PARTICLE), flux, exposure, seed,
        labels=DISCRIMINATION_LABELS, n_paths=N_PATHS, exact=exact)


def wave_pipeline(records: Sequence[CountRecord]) -> Dict[str, float]:
    """
    ``C``, ``X`` and ``V = 2 |rho_12|`` of the reconstructed target state.
    """
    rho = weighted_two_branch_reconstruct(group_branches(records, N_PATHS))
    report = coherence_report(rho, N_PATHS)
    return {"C": report.c_relent, "X": report.x,
            "V": 2 * abs(rho[0, 1])}


def joint_from_records(records: Sequence[CountRecord]) -> np.ndarray:
    """
    ``p_ij = n(M=i, D=j) / n``: rows are the outcomes ``phi1, phi2``,
    columns the paths.
    """
    counts = np.zeros((len(DISCRIMINATION_LABELS), N_PATHS))
    for r in records:
        try:
            i = DISCRIMINATION_LABELS.index(r.setting_label)
        except ValueError:
            raise ValueError(f"{r} is not a discrimination setting.")
        if not 1 <= r.branch <= N_PATHS:
            raise ValueError(f"{r} lies outside the paths.")
        counts[i, r.branch - 1] += r.counts
    total = counts.sum()
    if total <= 0:
        raise EmptyCountsError("No discrimination counts.")
    return counts / total


def particle_pipeline(records: Sequence[CountRecord]) -> Dict[str, float]:
    """
    ``H``, ``Ps``, ``P = Ps - 1/2`` and ``D = 2 P`` of the joint table.
    """
    joint = joint_from_records(records)
    ps = float(np.trace(joint))
    return {"H": mutual_information(joint), "Ps": ps,
            "P": ps - 1 / N_PATHS, "D": 2 * (ps - 1 / 2)}


def state_pipeline(records: Sequence[CountRecord]) -> Dict[str, float]:
    """
    Coherence of the state reconstructed from single-branch records, and
    the magnitude of its largest off-diagonal element.
    """
    rho = mle_reconstruct(records).rho_hat
    report = coherence_report(rho, rho.dim)
    off_diagonal = np.abs(rho.matrix - np.diag(np.diag(rho.matrix)))
    return {"C": report.c_relent, "C_l1": report.c_l1, "X": report.x,
            "offdiag_abs": float(off_diagonal.max())}

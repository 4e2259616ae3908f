"""
Tomography
==========

Simulated photon counting with Poisson shot noise, maximum-likelihood
state reconstruction, the two-branch reconstruction of the wave setting
and Monte-Carlo error bars.
"""

from .exceptions import (
    InvalidProjectorError,
    IncompleteTomographyError,
    EmptyCountsError,
    RecordSchemaError,
    MonteCarloError,
)
from .rng import substream, derive_seed
from .records import (
    CountRecord,
    PAULI_LABELS,
    DISCRIMINATION_LABELS,
    COLUMNS,
    projector_for_label,
    pauli_projectors,
    check_projector,
    total_counts,
    split_branches,
    records_to_frame,
    frame_to_records,
    save_records_csv,
    load_records_csv,
)
from .simulate import simulate_counts, simulate_branch_counts
from .mle import mle_reconstruct, TomoResult, check_complete
from .two_branch import (
    weighted_two_branch_reconstruct,
    branch_weights,
    group_branches,
)
from .montecarlo import monte_carlo_error, McEstimate, resample

__all__ = [
    "InvalidProjectorError",
    "IncompleteTomographyError",
    "EmptyCountsError",
    "RecordSchemaError",
    "MonteCarloError",
    "substream",
    "derive_seed",
    "CountRecord",
    "PAULI_LABELS",
    "DISCRIMINATION_LABELS",
    "COLUMNS",
    "projector_for_label",
    "pauli_projectors",
    "check_projector",
    "total_counts",
    "split_branches",
    "records_to_frame",
    "frame_to_records",
    "save_records_csv",
    "load_records_csv",
    "simulate_counts",
    "simulate_branch_counts",
    "mle_reconstruct",
    "TomoResult",
    "check_complete",
    "weighted_two_branch_reconstruct",
    "branch_weights",
    "group_branches",
    "monte_carlo_error",
    "McEstimate",
    "resample",
]

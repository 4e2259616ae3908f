"""
Duality
=======

Sweeps of the detector angle, the wave and particle quantifiers along
them, and the checks of the duality relations.
"""

from .records import (
    SweepRecord,
    DualityVerdict,
    QUANTIFIERS,
    RELATIONS,
    GY,
    ENTROPIC,
    QUADRATIC,
    IDEAL_TOL,
    entropic_bound,
    quadratic_bound,
)
from .verify import (
    verify_quadratic,
    verify_entropic,
    verify_gy,
    verify_all,
    quadratic_verdict,
    entropic_verdict,
    gy_verdict,
)
from .sweep import ideal_record, ideal_sweep, simulated_sweep
from .pipelines import (
    output_state,
    wave_records,
    particle_records,
    wave_pipeline,
    particle_pipeline,
    joint_from_records,
    state_pipeline,
)
from . import closed_form

__all__ = [
    "SweepRecord",
    "DualityVerdict",
    "QUANTIFIERS",
    "RELATIONS",
    "GY",
    "ENTROPIC",
    "QUADRATIC",
    "IDEAL_TOL",
    "entropic_bound",
    "quadratic_bound",
    "verify_quadratic",
    "verify_entropic",
    "verify_gy",
    "verify_all",
    "quadratic_verdict",
    "entropic_verdict",
    "gy_verdict",
    "ideal_record",
    "ideal_sweep",
    "simulated_sweep",
    "output_state",
    "wave_records",
    "particle_records",
    "wave_pipeline",
    "particle_pipeline",
    "joint_from_records",
    "state_pipeline",
    "closed_form",
]

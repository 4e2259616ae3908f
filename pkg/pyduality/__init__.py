"""
Wave-particle duality laboratory
================================

Simulation of a two-path which-way experiment with polarization-encoded
detectors: coherence of the path state as the wave property, minimum-error
path discrimination as the particle property, simulated photon counting
with maximum-likelihood tomography and Monte-Carlo error bars, and checks
of the duality relations between them.
"""


import os
import logging

from .qmath import (
    DensityMatrix,
    PureState,
    tensor,
    partial_trace,
    eigh,
    von_neumann_entropy,
    fidelity)
from .optics import (
    DetectorAngle,
    CircuitMode,
    detector_states,
    joint_state,
    target_state,
    element_matrix,
    composite_unitary)
from .coherence import (
    CoherenceReport,
    relent_coherence,
    l1_coherence,
    coherence_report)
from .discrimination import (
    Povm,
    DiscriminationResult,
    helstrom_povm,
    pretty_good_povm,
    success_probability,
    joint_distribution,
    mutual_information,
    discriminate)
from .tomo import (
    CountRecord,
    TomoResult,
    McEstimate,
    simulate_counts,
    mle_reconstruct,
    weighted_two_branch_reconstruct,
    monte_carlo_error)
from .duality import (
    SweepRecord,
    DualityVerdict,
    ideal_sweep,
    simulated_sweep,
    verify_quadratic,
    verify_entropic,
    verify_gy,
    verify_all)
from .config import ExperimentConfig, ConfigError, load_experiment_config
from .version import __version__  # noqa: F401


__all__ = [
    # quantum math
    "DensityMatrix",
    "PureState",
    "tensor",
    "partial_trace",
    "eigh",
    "von_neumann_entropy",
    "fidelity",
    # optics
    "DetectorAngle",
    "CircuitMode",
    "detector_states",
    "joint_state",
    "target_state",
    "element_matrix",
    "composite_unitary",
    # coherence
    "CoherenceReport",
    "relent_coherence",
    "l1_coherence",
    "coherence_report",
    # discrimination
    "Povm",
    "DiscriminationResult",
    "helstrom_povm",
    "pretty_good_povm",
    "success_probability",
    "joint_distribution",
    "mutual_information",
    "discriminate",
    # tomography
    "CountRecord",
    "TomoResult",
    "McEstimate",
    "simulate_counts",
    "mle_reconstruct",
    "weighted_two_branch_reconstruct",
    "monte_carlo_error",
    # duality
    "SweepRecord",
    "DualityVerdict",
    "ideal_sweep",
    "simulated_sweep",
    "verify_quadratic",
    "verify_entropic",
    "verify_gy",
    "verify_all",
    # configuration
    "ExperimentConfig",
    "ConfigError",
    "load_experiment_config",
]


try:
    loglevel = os.environ["DUALITY_LOG_LEVEL"].upper()
except KeyError:
    loglevel = "INFO"

logging.basicConfig(level=loglevel)

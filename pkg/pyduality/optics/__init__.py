"""
Optics
======

Model of the which-way interferometer: polarization-encoded detector
states, the path (x) polarization product space, Jones-calculus elements
and the composite circuit for the wave and particle settings.

The basis of the four-dimensional space is ordered
``(1,H), (1,V), (2,H), (2,V)``; paths are counted from 1.
"""

from .exceptions import AngleRangeError
from .detectors import (
    DetectorAngle,
    H,
    V,
    mode_index,
    detector_states,
    symmetric_detector_states,
    detector_ensemble,
    joint_state,
    target_state,
    detector_state,
)
from .elements import (
    OpticalElement,
    Identity,
    HalfWavePlate,
    QuarterWavePlate,
    PhaseShift,
    BeamDisplacer,
    element_matrix,
)
from .circuit import (
    CircuitMode,
    circuit_elements,
    composite_unitary,
    closed_form_unitary,
    apply_circuit,
    HADAMARD,
    SIGMA_X,
)

__all__ = [
    "AngleRangeError",
    "DetectorAngle",
    "H",
    "V",
    "mode_index",
    "detector_states",
    "symmetric_detector_states",
    "detector_ensemble",
    "joint_state",
    "target_state",
    "detector_state",
    "OpticalElement",
    "Identity",
    "HalfWavePlate",
    "QuarterWavePlate",
    "PhaseShift",
    "BeamDisplacer",
    "element_matrix",
    "CircuitMode",
    "circuit_elements",
    "composite_unitary",
    "closed_form_unitary",
    "apply_circuit",
    "HADAMARD",
    "SIGMA_X",
]

"""
Interferometer circuit
----------------------

The element sequence between the detector preparation and the
tomography stage, for the two settings of the mode-selecting half-wave
plate.

The elements are named after the devices of the interferometer. HWP4
selects the mode. The plates that undo it sit behind BD4 on paths 1 and
2; in the reduced circuit they are applied directly after HWP4.
Both sit at 45 degrees in particle mode and at 0 degrees in wave mode. The
three displacers BD2 to BD4 are reduced to the two paths entering and
leaving them: each of the two interferences, between BD2 and BD3 and
between BD3 and BD4, becomes a displacer exchanging the ``(1, V)`` and
``(2, H)`` modes, preceded by a plate pair. On two paths the plate pairs
sit at 22.5 degrees; in the four-path interferometer the same action is
shared between the displacer walk-off and HWP5 and HWP6 at 45 degrees.

In wave mode the phase of 180 degrees on path 2 comes first and the
product is ``(sigma_x H) (x) H``. In particle mode the displacer stages
act trivially and are left out; the product is the identity.
"""

from enum import Enum
from typing import List
import logging
import numpy as np

from ..qmath import PureState, as_matrix, tensor
from .elements import (OpticalElement, HalfWavePlate, PhaseShift,
                       BeamDisplacer, element_matrix)

logger = logging.getLogger("Optics")

HADAMARD = np.array([[1, 1], [1, -1]], dtype=complex) / np.sqrt(2)
SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)

EXCHANGE_ROUTING = {(1, "V"): (2, "H"), (2, "H"): (1, "V")}


class CircuitMode(Enum):
    WAVE = "wave"
    PARTICLE = "particle"

    @property
    def hwp4_angle(self) -> float:
        """
        Setting of the mode-selecting half-wave plate in degrees.
        """
        return 0.0 if self is CircuitMode.WAVE else 45.0

    @property
    def phase(self) -> float:
        """
        Relative phase on path 2 in degrees.
        """
        return 180.0 if self is CircuitMode.WAVE else 0.0

    @classmethod
    def parse(cls, value) -> "CircuitMode":
        if isinstance(value, CircuitMode):
            return value
        return cls(str(value).lower())


def circuit_elements(mode: CircuitMode) -> List[OpticalElement]:
    """
    The elements of ``mode`` in the order the photon passes them.
    """
    mode = CircuitMode.parse(mode)
    elements = [
        HalfWavePlate(mode.hwp4_angle, (1, 2), name="hwp4"),
        HalfWavePlate(mode.hwp4_angle, (1, 2), name="bd4-path-plates"),
    ]
    if mode is CircuitMode.PARTICLE:
        return elements
    elements += [
        PhaseShift(mode.phase, 2, name="phi"),
        HalfWavePlate(22.5, (1, 2), name="bd2-bd3-plates"),
        BeamDisplacer(EXCHANGE_ROUTING, name="bd2-bd3"),
        HalfWavePlate(22.5, (1, 2), name="hwp5-hwp6"),
        BeamDisplacer(EXCHANGE_ROUTING, name="bd3-bd4"),
    ]
    return elements


def composite_unitary(mode: CircuitMode) -> np.ndarray:
    """
    The 4x4 unitary ``U = E_n ... E_1`` of the circuit in ``mode``.
    """
    u = np.eye(4, dtype=complex)
    for element in circuit_elements(mode):
        u = element_matrix(element) @ u
    return as_matrix(u)


def closed_form_unitary(mode: CircuitMode) -> np.ndarray:
    """
    ``(sigma_x H) (x) H`` in wave mode, the identity in particle mode.
    """
    if CircuitMode.parse(mode) is CircuitMode.WAVE:
        return tensor(SIGMA_X @ HADAMARD, HADAMARD)
    return as_matrix(np.eye(4))


def apply_circuit(state: PureState, mode: CircuitMode) -> PureState:
    """
    Send the joint photon-detector state through the circuit.
    """
    return state.evolve(composite_unitary(mode))

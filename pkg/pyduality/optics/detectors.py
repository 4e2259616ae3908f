"""
Detector states
---------------

Which-way detectors are encoded in the photon polarization. A detector
angle ``theta`` prepares

.. math::

    |\\eta_1\\rangle = \\cos\\theta |H\\rangle + \\sin\\theta |V\\rangle,
    \\quad
    |\\eta_2\\rangle = \\cos\\theta |H\\rangle - \\sin\\theta |V\\rangle,

with overlap ``cos 2 theta``. The joint photon-detector state is
``(|1>|eta_1> + |2>|eta_2>) / sqrt(2)`` in the (path, polarization) basis
``(1,H), (1,V), (2,H), (2,V)``.

For more than two paths, a symmetric ensemble with the same pairwise
overlap ``cos 2 theta`` is used in an abstract N-dimensional detector space.
"""

from typing import List, Tuple, Union
import numpy as np
from scipy import linalg as la

from ..qmath import (DensityMatrix, PureState, partial_trace,
                     FIRST, SECOND)
from .exceptions import AngleRangeError


H = 0
V = 1
POLARIZATIONS = {"H": H, "V": V}
N_POLARIZATIONS = 2


class DetectorAngle:
    """
    The detector preparation angle in degrees, ``0 <= theta <= 90``.
    """

    def __init__(self, theta: float):
        theta = float(theta)
        if not 0 <= theta <= 90:
            raise AngleRangeError(
                f"Detector angle must lie in [0, 90] degrees, got {theta}.")
        self.theta = theta

    @classmethod
    def of(cls, theta: Union[float, "DetectorAngle"]) -> "DetectorAngle":
        if isinstance(theta, DetectorAngle):
            return theta
        return cls(theta)

    @property
    def radians(self) -> float:
        return np.deg2rad(self.theta)

    @property
    def overlap(self) -> float:
        """
        ``<eta_1|eta_2> = cos 2 theta``.
        """
        return float(np.cos(2 * self.radians))

    def __float__(self):
        return self.theta

    def __repr__(self):
        return f"<DetectorAngle {self.theta} deg>"


def mode_index(path: int, polarization: Union[int, str],
               n_paths: int = 2) -> int:
    """
    Index of the basis state ``|path>|polarization>``, paths counted from 1.
    """
    if isinstance(polarization, str):
        polarization = POLARIZATIONS[polarization]
    if not 1 <= path <= n_paths:
        raise ValueError(f"Path {path} out of range 1..{n_paths}.")
    return (path - 1) * N_POLARIZATIONS + polarization


def detector_states(theta: Union[float, DetectorAngle]) \
        -> Tuple[PureState, PureState]:
    """
    The two polarization detector states for angle ``theta``.
    """
    t = DetectorAngle.of(theta).radians
    c, s = np.cos(t), np.sin(t)
    return PureState([c, s]), PureState([c, -s])


def symmetric_detector_states(n: int, overlap: float) -> List[PureState]:
    """
    ``n`` detector kets with real pairwise overlap ``overlap``.

    The kets are the columns of the square root of the Gram matrix
    ``(1 - c) I + c J``, which is positive iff
    ``-1 / (n - 1) <= c <= 1``.
    """
    if n < 2:
        raise ValueError(f"Need at least two detector states, got {n}.")
    if not -1 / (n - 1) - 1e-12 <= overlap <= 1 + 1e-12:
        raise ValueError(
            f"Overlap {overlap} is not realizable by {n} symmetric states.")
    gram = (1 - overlap) * np.eye(n) + overlap * np.ones((n, n))
    vals, vecs = la.eigh(gram)
    root = (vecs * np.sqrt(np.clip(vals, 0, None))) @ vecs.T
    return [PureState.from_unnormalized(root[:, k]) for k in range(n)]


def detector_ensemble(theta: Union[float, DetectorAngle],
                      n_paths: int = 2) -> List[PureState]:
    """
    The detector states attached to each of ``n_paths`` paths.
    """
    angle = DetectorAngle.of(theta)
    if n_paths == 2:
        return list(detector_states(angle))
    return symmetric_detector_states(n_paths, angle.overlap)


def joint_state(theta: Union[float, DetectorAngle],
                n_paths: int = 2) -> PureState:
    """
    The photon-detector state ``sum_i |i>|eta_i> / sqrt(N)``.
    """
    etas = detector_ensemble(theta, n_paths)
    amplitudes = np.zeros(n_paths * etas[0].dim, dtype=complex)
    for i, eta in enumerate(etas):
        path = np.zeros(n_paths)
        path[i] = 1
        amplitudes += np.kron(path, eta.amplitudes)
    return PureState(amplitudes / np.sqrt(n_paths))


def target_state(theta: Union[float, DetectorAngle],
                 n_paths: int = 2) -> DensityMatrix:
    """
    The path (target) state obtained by tracing out the detector.
    """
    psi = joint_state(theta, n_paths)
    d_det = psi.dim // n_paths
    return partial_trace(psi.to_density(), (n_paths, d_det), keep=FIRST)


def detector_state(theta: Union[float, DetectorAngle],
                   n_paths: int = 2) -> DensityMatrix:
    """
    The detector state obtained by tracing out the path.
    """
    psi = joint_state(theta, n_paths)
    d_det = psi.dim // n_paths
    return partial_trace(psi.to_density(), (n_paths, d_det), keep=SECOND)

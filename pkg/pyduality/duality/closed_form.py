"""
Closed forms
------------

Scalar expressions of all quantifiers for the two-path family with
detector angle ``theta`` in degrees. The matrix pipelines are checked
against them.
"""

import numpy as np

from ..qmath import binary_entropy


def _rad(theta: float) -> float:
    return np.deg2rad(float(theta))


def coherence(theta: float) -> float:
    """
    ``C = 1 - h(cos^2 theta)``.
    """
    return 1 - binary_entropy(np.cos(_rad(theta)) ** 2)


def success_probability(theta: float) -> float:
    """
    ``P_s = (1 + sin 2 theta) / 2``.
    """
    return (1 + abs(np.sin(2 * _rad(theta)))) / 2


def mutual_information(theta: float) -> float:
    """
    ``H(M:D) = 1 - h(P_s)``.
    """
    return 1 - binary_entropy(success_probability(theta))


def l1_coherence_normalized(theta: float) -> float:
    """
    ``X = |cos 2 theta| / 2``.
    """
    return abs(np.cos(2 * _rad(theta))) / 2


def visibility(theta: float) -> float:
    return abs(np.cos(2 * _rad(theta)))


def distinguishability(theta: float) -> float:
    return abs(np.sin(2 * _rad(theta)))


def joint_table(theta: float) -> np.ndarray:
    """
    ``p_11 = p_22 = 1/4 + sin 2 theta / 4``, off-diagonal the rest.
    """
    s = abs(np.sin(2 * _rad(theta)))
    return np.array([[1 + s, 1 - s], [1 - s, 1 + s]]) / 4

"""
Discrimination
==============

Particle-property quantifiers: minimum-error discrimination of the
detector states, the success probability of identifying the path, the
joint distribution of outcome and path and their mutual information.
"""

from .exceptions import InvalidPovmError
from .povm import Povm, POVM_TOL
from .helstrom import helstrom_povm, helstrom_success_probability
from .pretty_good import pretty_good_povm
from .information import (
    success_probability,
    joint_distribution,
    mutual_information,
    DiscriminationResult,
    discriminate,
    random_measurement_bound,
)

__all__ = [
    "InvalidPovmError",
    "Povm",
    "POVM_TOL",
    "helstrom_povm",
    "helstrom_success_probability",
    "pretty_good_povm",
    "success_probability",
    "joint_distribution",
    "mutual_information",
    "DiscriminationResult",
    "discriminate",
    "random_measurement_bound",
]

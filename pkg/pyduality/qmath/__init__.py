"""
Quantum-information primitives
==============================

Dense complex linear algebra for the small spaces of a which-way
experiment: density matrices and pure states, Kronecker products, partial
traces, Hermitian eigendecompositions, entropies and fidelities.

All matrices are plain ``numpy.ndarray`` objects of complex dtype. Basis
ordering for composite systems is first factor major, second factor minor,
i.e. ``(path, polarization)`` for the interferometer.
"""

from .exceptions import (
    InvalidStateError,
    DimensionMismatchError,
    NotHermitianError,
)
from .states import (
    DensityMatrix,
    PureState,
    as_matrix,
    HERMITIAN_TOL,
    TRACE_TOL,
    PSD_TOL,
    NORM_TOL,
)
from .linalg import (
    tensor,
    partial_trace,
    eigh,
    von_neumann_entropy,
    shannon_entropy,
    binary_entropy,
    fidelity,
    projector,
    is_unitary,
    equal_up_to_phase,
    FIRST,
    SECOND,
)
from .random import (
    random_unitary,
    random_density_matrix,
    random_projective_measurement,
)

__all__ = [
    # exceptions
    "InvalidStateError",
    "DimensionMismatchError",
    "NotHermitianError",
    # states
    "DensityMatrix",
    "PureState",
    "as_matrix",
    "HERMITIAN_TOL",
    "TRACE_TOL",
    "PSD_TOL",
    "NORM_TOL",
    # linear algebra
    "tensor",
    "partial_trace",
    "eigh",
    "von_neumann_entropy",
    "shannon_entropy",
    "binary_entropy",
    "fidelity",
    "projector",
    "is_unitary",
    "equal_up_to_phase",
    "FIRST",
    "SECOND",
    # random
    "random_unitary",
    "random_density_matrix",
    "random_projective_measurement",
]

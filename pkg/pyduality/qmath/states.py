"""
States
------

Immutable density matrices and pure states. Constructors validate the
physical invariants and refuse anything outside the declared tolerances.
"""

from typing import Union
import numpy as np
from scipy import linalg as la

from .exceptions import InvalidStateError, NotHermitianError


HERMITIAN_TOL = 1e-12
TRACE_TOL = 1e-12
PSD_TOL = 1e-10
NORM_TOL = 1e-12


def as_matrix(x, square: bool = True) -> np.ndarray:
    """
    Convert ``x`` to a read-only complex matrix.

    Parameters
    ----------
    x: array_like
        The entries, two-dimensional.
    square: bool, optional (default = True)
        Whether to insist on a square shape.

    Returns
    -------
    matrix: np.ndarray
        A complex128 copy, flagged non-writeable.
    """
    m = np.array(x, dtype=complex)
    if m.ndim != 2:
        raise ValueError(f"Expected a matrix, got shape {m.shape}.")
    if square and m.shape[0] != m.shape[1]:
        raise ValueError(f"Expected a square matrix, got shape {m.shape}.")
    if not np.all(np.isfinite(m)):
        raise ValueError("Matrix has non-finite entries.")
    m.setflags(write=False)
    return m


def _freeze(arr: np.ndarray) -> np.ndarray:
    arr.setflags(write=False)
    return arr


class PureState:
    """
    A normalized state vector.

    Parameters
    ----------
    amplitudes: array_like
        The complex amplitudes. The squared norm has to be one within
        ``NORM_TOL``; use :meth:`from_unnormalized` otherwise.
    """

    def __init__(self, amplitudes):
        vec = np.array(amplitudes, dtype=complex).reshape(-1)
        if vec.size == 0 or not np.all(np.isfinite(vec)):
            raise InvalidStateError("Amplitudes must be finite and non-empty.")
        norm2 = float(np.vdot(vec, vec).real)
        if abs(norm2 - 1) > NORM_TOL:
            raise InvalidStateError(
                f"State is not normalized: squared norm {norm2}.")
        self._amplitudes = _freeze(vec)

    @classmethod
    def from_unnormalized(cls, vector) -> "PureState":
        vec = np.array(vector, dtype=complex).reshape(-1)
        norm = np.linalg.norm(vec)
        if norm == 0:
            raise InvalidStateError("Cannot normalize the zero vector.")
        return cls(vec / norm)

    @classmethod
    def basis(cls, dim: int, index: int) -> "PureState":
        """
        The computational basis ket ``|index>`` in dimension ``dim``.
        """
        if not 0 <= index < dim:
            raise ValueError(f"Basis index {index} out of range for {dim}.")
        vec = np.zeros(dim, dtype=complex)
        vec[index] = 1
        return cls(vec)

    @property
    def dim(self) -> int:
        return self._amplitudes.size

    @property
    def amplitudes(self) -> np.ndarray:
        return self._amplitudes

    def inner(self, other: "PureState") -> complex:
        """
        The overlap ``<self|other>``.
        """
        if other.dim != self.dim:
            raise ValueError("Dimension mismatch in inner product.")
        return complex(np.vdot(self._amplitudes, other._amplitudes))

    def projector(self) -> np.ndarray:
        return _freeze(np.outer(self._amplitudes,
                                self._amplitudes.conj()))

    def to_density(self) -> "DensityMatrix":
        return DensityMatrix(self.projector())

    def evolve(self, unitary) -> "PureState":
        u = as_matrix(unitary)
        return PureState.from_unnormalized(u @ self._amplitudes)

    def __repr__(self):
        return f"<PureState dim={self.dim} {np.round(self._amplitudes, 6)}>"


class DensityMatrix:
    """
    A trace-one, Hermitian, positive semidefinite matrix.

    Parameters
    ----------
    matrix: array_like
        The entries. Hermiticity and the unit trace are checked within
        ``HERMITIAN_TOL`` and ``TRACE_TOL``, eigenvalues must not fall below
        ``-PSD_TOL``.

    .. note::
        Matrices computed numerically (reconstructions, partial traces of
        rotated states) should go through :meth:`from_operator`, which
        removes the round-off anti-Hermitian part and renormalizes the trace
        before validating.
    """

    def __init__(self, matrix):
        m = as_matrix(matrix)
        if np.max(np.abs(m - m.conj().T)) > HERMITIAN_TOL:
            raise NotHermitianError("Density matrix is not Hermitian.")
        trace = np.trace(m).real
        if abs(trace - 1) > TRACE_TOL:
            raise InvalidStateError(f"Density matrix has trace {trace}.")
        lowest = la.eigvalsh(m)[0]
        if lowest < -PSD_TOL:
            raise InvalidStateError(
                f"Density matrix is not positive: eigenvalue {lowest}.")
        self._matrix = m

    @classmethod
    def from_operator(cls, op) -> "DensityMatrix":
        """
        Hermitize and trace-normalize ``op``, then validate.
        """
        m = np.array(op, dtype=complex)
        m = (m + m.conj().T) / 2
        trace = np.trace(m).real
        if trace <= 0:
            raise InvalidStateError(f"Operator has trace {trace}.")
        return cls(m / trace)

    @classmethod
    def maximally_mixed(cls, dim: int) -> "DensityMatrix":
        return cls(np.eye(dim, dtype=complex) / dim)

    @classmethod
    def from_pure(cls, state: Union[PureState, np.ndarray]) \
            -> "DensityMatrix":
        if not isinstance(state, PureState):
            state = PureState(state)
        return state.to_density()

    @property
    def dim(self) -> int:
        return self._matrix.shape[0]

    @property
    def matrix(self) -> np.ndarray:
        return self._matrix

    def diag(self) -> "DensityMatrix":
        """
        The dephased state, keeping only the diagonal.
        """
        return DensityMatrix(np.diag(np.diag(self._matrix)))

    def expectation(self, op) -> float:
        """
        ``Tr(op rho)`` for a Hermitian ``op``.
        """
        return float(np.trace(as_matrix(op) @ self._matrix).real)

    def conjugate_by(self, unitary) -> "DensityMatrix":
        """
        The state ``U rho U^dagger``.
        """
        u = as_matrix(unitary)
        return DensityMatrix.from_operator(u @ self._matrix @ u.conj().T)

    def __getitem__(self, item):
        return self._matrix[item]

    def __repr__(self):
        return f"<DensityMatrix dim={self.dim}\n{np.round(self._matrix, 6)}>"

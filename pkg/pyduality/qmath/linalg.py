"""
Linear algebra
--------------

Kronecker products, partial traces, spectra and the entropic and
fidelity functionals built on them. Logarithms are base 2 throughout.
"""

from typing import Tuple, Union
import numpy as np
from scipy import linalg as la
from scipy import stats as st

from .exceptions import DimensionMismatchError, NotHermitianError
from .states import DensityMatrix, as_matrix, HERMITIAN_TOL


FIRST = 0
SECOND = 1

PROBABILITY_CLAMP = 1e-12


def tensor(a, b) -> np.ndarray:
    """
    Kronecker product ``a (x) b``. The first factor is the major index.
    """
    return as_matrix(np.kron(as_matrix(a, square=False),
                             as_matrix(b, square=False)), square=False)


def projector(vector) -> np.ndarray:
    """
    The rank-one operator ``|v><v|`` of a (normalized) vector.
    """
    v = np.asarray(vector, dtype=complex).reshape(-1)
    return as_matrix(np.outer(v, v.conj()))


def partial_trace(state: Union[DensityMatrix, np.ndarray],
                  dims: Tuple[int, int],
                  keep: int = FIRST):
    """
    Reduce a bipartite operator to one factor.

    Parameters
    ----------
    state: DensityMatrix or np.ndarray
        Operator on the product space of dimension ``dims[0] * dims[1]``.
    dims: Tuple[int, int]
        The factor dimensions, first factor major.
    keep: int, optional (default = FIRST)
        ``FIRST`` keeps the first factor (traces out the second),
        ``SECOND`` keeps the second factor.

    Returns
    -------
    reduced: DensityMatrix or np.ndarray
        A :class:`DensityMatrix` if a density matrix was passed, otherwise
        the reduced operator as an array.
    """
    is_state = isinstance(state, DensityMatrix)
    m = state.matrix if is_state else as_matrix(state)
    d0, d1 = (int(d) for d in dims)
    if d0 * d1 != m.shape[0]:
        raise DimensionMismatchError(
            f"Dimensions {dims} do not factor a {m.shape[0]}-dim space.")
    r = m.reshape(d0, d1, d0, d1)
    if keep == FIRST:
        reduced = np.einsum("ijkj->ik", r)
    elif keep == SECOND:
        reduced = np.einsum("ijil->jl", r)
    else:
        raise ValueError(f"keep must be FIRST or SECOND, got {keep}.")
    if is_state:
        return DensityMatrix.from_operator(reduced)
    return as_matrix(reduced)


def eigh(m: Union[DensityMatrix, np.ndarray]) \
        -> Tuple[np.ndarray, np.ndarray]:
    """
    Eigendecomposition of a Hermitian matrix.

    Returns
    -------
    eigenvalues: np.ndarray
        Real eigenvalues in descending order.
    eigenvectors: np.ndarray
        Unitary matrix with the corresponding eigenvectors as columns, so
        that ``m = V diag(eigenvalues) V^dagger``.
    """
    if isinstance(m, DensityMatrix):
        mat = m.matrix
    else:
        mat = as_matrix(m)
        scale = max(1.0, float(np.max(np.abs(mat))))
        if np.max(np.abs(mat - mat.conj().T)) > HERMITIAN_TOL * scale:
            raise NotHermitianError("eigh requires a Hermitian matrix.")
    vals, vecs = la.eigh(mat)
    return vals[::-1].copy(), vecs[:, ::-1].copy()


def shannon_entropy(probabilities) -> float:
    """
    Shannon entropy in bits, with ``0 log 0 = 0``.

    Entries in ``[-1e-12, 0)`` are rounding artefacts of traces and are
    clamped to zero; anything more negative is an error.
    """
    p = np.asarray(probabilities, dtype=float).reshape(-1)
    if np.any(p < -PROBABILITY_CLAMP):
        raise ValueError(f"Negative probabilities: {p[p < 0]}.")
    p = np.clip(p, 0, None)
    if p.sum() == 0:
        raise ValueError("Probabilities sum to zero.")
    return float(st.entropy(p, base=2))


def binary_entropy(p: float) -> float:
    """
    ``h(p) = -p log2 p - (1 - p) log2 (1 - p)``.
    """
    return shannon_entropy([p, 1 - p])


def von_neumann_entropy(rho: DensityMatrix) -> float:
    """
    ``S(rho) = -Tr(rho log2 rho)`` from the spectrum.

    Eigenvalues are clamped to ``[0, 1]`` first, which absorbs round-off
    negativity of order ``PSD_TOL``.
    """
    vals, _ = eigh(rho)
    return shannon_entropy(np.clip(vals, 0, 1))


def _psd_sqrt(m: np.ndarray) -> np.ndarray:
    vals, vecs = la.eigh(m)
    return (vecs * np.sqrt(np.clip(vals, 0, None))) @ vecs.conj().T


def fidelity(a: DensityMatrix, b: DensityMatrix) -> float:
    """
    Uhlmann fidelity ``(Tr sqrt(sqrt(a) b sqrt(a)))^2``, clipped to
    ``[0, 1]``.
    """
    if a.dim != b.dim:
        raise DimensionMismatchError(
            f"Fidelity of states with dims {a.dim} and {b.dim}.")
    sa = _psd_sqrt(a.matrix)
    inner = sa @ b.matrix @ sa
    vals = la.eigvalsh((inner + inner.conj().T) / 2)
    f = float(np.sum(np.sqrt(np.clip(vals, 0, None))) ** 2)
    return min(max(f, 0.0), 1.0)


def is_unitary(u, atol: float = 1e-12) -> bool:
    m = as_matrix(u)
    return bool(np.max(np.abs(m.conj().T @ m - np.eye(m.shape[0]))) < atol)


def equal_up_to_phase(a, b, atol: float = 1e-10) -> bool:
    """
    Whether ``a = exp(i phi) b`` for some global phase, comparing the
    maximum entry difference at the best phase.
    """
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    if a.shape != b.shape:
        return False
    overlap = np.vdot(b, a)
    phase = overlap / abs(overlap) if abs(overlap) > 0 else 1
    return bool(np.max(np.abs(a - phase * b)) < atol)

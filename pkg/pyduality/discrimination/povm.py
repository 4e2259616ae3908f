from typing import List, Sequence
import numpy as np
from scipy import linalg as la

from ..qmath import as_matrix, DensityMatrix
from .exceptions import InvalidPovmError


POVM_TOL = 1e-10


class Povm:
    """
    A positive operator valued measure.

    Parameters
    ----------
    elements: list of array_like
        Positive semidefinite operators of a common dimension which sum to
        the identity within ``POVM_TOL``.
    labels: sequence, optional
        Outcome identifiers. Defaults to ``1, ..., len(elements)``; outcome
        ``i`` is read as "the state was number ``i``".
    degenerate: bool, optional
        Set by constructions that had to pick an arbitrary measurement.
    pseudo_inverse: bool, optional
        Set by constructions that inverted a singular operator on its
        support only.
    """

    def __init__(self, elements: Sequence, labels: Sequence = None,
                 degenerate: bool = False, pseudo_inverse: bool = False):
        if len(elements) == 0:
            raise InvalidPovmError("A POVM needs at least one element.")
        mats = [as_matrix(e) for e in elements]
        dim = mats[0].shape[0]
        if any(m.shape != (dim, dim) for m in mats):
            raise InvalidPovmError("POVM elements differ in dimension.")
        for k, m in enumerate(mats):
            if np.max(np.abs(m - m.conj().T)) > POVM_TOL:
                raise InvalidPovmError(f"Element {k} is not Hermitian.")
            lowest = la.eigvalsh(m)[0]
            if lowest < -POVM_TOL:
                raise InvalidPovmError(
                    f"Element {k} is not positive: eigenvalue {lowest}.")
        deviation = np.max(np.abs(sum(mats) - np.eye(dim)))
        if deviation > POVM_TOL:
            raise InvalidPovmError(
                f"Elements do not sum to the identity (deviation "
                f"{deviation:.3g}).")
        if labels is None:
            labels = list(range(1, len(mats) + 1))
        if len(labels) != len(mats):
            raise InvalidPovmError("Need one label per element.")
        self.elements: List[np.ndarray] = mats
        self.labels = list(labels)
        self.degenerate = degenerate
        self.pseudo_inverse = pseudo_inverse

    @property
    def dim(self) -> int:
        return self.elements[0].shape[0]

    def __len__(self):
        return len(self.elements)

    def __getitem__(self, item) -> np.ndarray:
        return self.elements[item]

    def probabilities(self, rho: DensityMatrix) -> np.ndarray:
        """
        Outcome distribution ``Tr(Pi_i rho)``.
        """
        return np.array([rho.expectation(e) for e in self.elements])

    def __repr__(self):
        flags = "".join([" degenerate" if self.degenerate else "",
                         " pseudo-inverse" if self.pseudo_inverse else ""])
        return f"<Povm dim={self.dim} outcomes={self.labels}{flags}>"

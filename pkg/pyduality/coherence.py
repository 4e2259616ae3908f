"""
Coherence
=========

Wave-property quantifiers of a path state: the relative entropy of
coherence and the l1 norm of coherence, both in the path basis.
"""

from typing import Union
import numpy as np

from .qmath import (DensityMatrix, DimensionMismatchError,
                    von_neumann_entropy, shannon_entropy)


def relent_coherence(rho: DensityMatrix) -> float:
    """
    Relative entropy of coherence ``S(diag rho) - S(rho)`` in bits.

    Both entropies are computed from spectra; the diagonal is already the
    spectrum of the dephased state. Round-off below zero is clipped.
    """
    s_diag = shannon_entropy(np.clip(np.diag(rho.matrix).real, 0, 1))
    return max(s_diag - von_neumann_entropy(rho), 0.0)


def l1_coherence(rho: DensityMatrix) -> float:
    """
    ``sum_{i != j} |rho_ij|``.
    """
    m = np.abs(rho.matrix)
    return float(m.sum() - np.trace(m))


class CoherenceReport:
    """
    Coherence of a path state.

    Attributes
    ----------
    c_relent: float
        Relative entropy of coherence in bits.
    c_l1: float
        l1 norm of coherence.
    x: float
        Normalized l1 coherence ``c_l1 / n_paths``.
    n_paths: int
        Number of paths.
    """

    def __init__(self, c_relent: float, c_l1: float, n_paths: int):
        self.c_relent = float(c_relent)
        self.c_l1 = float(c_l1)
        self.n_paths = int(n_paths)
        self.x = self.c_l1 / self.n_paths

    def to_dict(self) -> dict:
        return {"c_relent": self.c_relent, "c_l1": self.c_l1,
                "x": self.x, "n_paths": self.n_paths}

    def __repr__(self):
        return (f"<CoherenceReport C={self.c_relent:.6g} "
                f"C_l1={self.c_l1:.6g} X={self.x:.6g} N={self.n_paths}>")


def coherence_report(rho: Union[DensityMatrix, np.ndarray],
                     n_paths: int = 2) -> CoherenceReport:
    """
    Both coherence measures of ``rho``.

    Parameters
    ----------
    rho: DensityMatrix
        The path state.
    n_paths: int, optional (default = 2)
        Number of paths, has to equal the dimension of ``rho``.
    """
    if not isinstance(rho, DensityMatrix):
        rho = DensityMatrix(rho)
    if rho.dim != n_paths:
        raise DimensionMismatchError(
            f"State of dimension {rho.dim} does not describe "
            f"{n_paths} paths.")
    return CoherenceReport(relent_coherence(rho), l1_coherence(rho), n_paths)

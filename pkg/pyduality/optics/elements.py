"""
Optical elements
----------------

Jones-calculus elements acting on the (path, polarization) product space.
Waveplates and phase shifters act on the polarization of a selected set of
paths and as the identity elsewhere; beam displacers permute the labeled
(path, polarization) modes.
"""

from abc import ABC, abstractmethod
from typing import Dict, Iterable, Tuple, Union
import logging
import numpy as np

from ..qmath import as_matrix, is_unitary
from .detectors import mode_index, N_POLARIZATIONS

logger = logging.getLogger("Optics")

UNITARY_TOL = 1e-12

Paths = Union[None, int, Iterable[int]]
Mode = Tuple[int, str]


def _as_paths(paths: Paths) -> Union[None, Tuple[int, ...]]:
    if paths is None:
        return None
    if isinstance(paths, int):
        return (paths,)
    return tuple(sorted(set(int(p) for p in paths)))


class OpticalElement(ABC):
    """
    Abstract optical element. Derive all elements from this class.

    Parameters
    ----------
    paths: int or iterable of int, optional
        The paths (counted from 1) the element sits on.
        Defaults to all paths.
    name: str, optional
        A label, e.g. the position in the setup.
    """

    def __init__(self, paths: Paths = None, name: str = ""):
        self.paths = _as_paths(paths)
        self.name = name

    def acts_on(self, path: int) -> bool:
        return self.paths is None or path in self.paths

    @abstractmethod
    def jones(self) -> np.ndarray:
        """
        The 2x2 Jones matrix applied to the polarization of every
        selected path.
        """

    def matrix(self, n_paths: int = 2) -> np.ndarray:
        """
        The matrix on the full ``n_paths * 2`` dimensional space.
        """
        if self.paths is not None and max(self.paths) > n_paths:
            raise ValueError(
                f"{self} sits on path {max(self.paths)} of only {n_paths}.")
        jones = self.jones()
        eye = np.eye(N_POLARIZATIONS, dtype=complex)
        m = np.zeros((n_paths * N_POLARIZATIONS,) * 2, dtype=complex)
        for path in range(1, n_paths + 1):
            sl = slice((path - 1) * N_POLARIZATIONS, path * N_POLARIZATIONS)
            m[sl, sl] = jones if self.acts_on(path) else eye
        return m

    def __repr__(self):
        label = f" {self.name}" if self.name else ""
        return f"<{self.__class__.__name__}{label} paths={self.paths}>"


class Identity(OpticalElement):
    def jones(self) -> np.ndarray:
        return np.eye(N_POLARIZATIONS, dtype=complex)


class HalfWavePlate(OpticalElement):
    """
    Half-wave plate with fast axis at ``angle`` degrees from horizontal,

    .. math::

        \\begin{pmatrix} \\cos 2\\alpha & \\sin 2\\alpha \\\\
        \\sin 2\\alpha & -\\cos 2\\alpha \\end{pmatrix}.

    At 22.5 degrees this is the Hadamard matrix, at 45 degrees it
    exchanges H and V.
    """

    def __init__(self, angle: float, paths: Paths = None, name: str = ""):
        super().__init__(paths, name)
        self.angle = float(angle)

    def jones(self) -> np.ndarray:
        a = 2 * np.deg2rad(self.angle)
        return np.array([[np.cos(a), np.sin(a)],
                         [np.sin(a), -np.cos(a)]], dtype=complex)


class QuarterWavePlate(OpticalElement):
    """
    Quarter-wave plate with fast axis at ``angle`` degrees.
    """

    def __init__(self, angle: float, paths: Paths = None, name: str = ""):
        super().__init__(paths, name)
        self.angle = float(angle)

    def jones(self) -> np.ndarray:
        a = np.deg2rad(self.angle)
        c, s = np.cos(a), np.sin(a)
        off = (1 - 1j) * s * c
        return np.array([[c ** 2 + 1j * s ** 2, off],
                         [off, s ** 2 + 1j * c ** 2]], dtype=complex)


class PhaseShift(OpticalElement):
    """
    Multiply the selected paths by ``exp(i phase)``, ``phase`` in degrees.
    """

    def __init__(self, phase: float, paths: Paths = None, name: str = ""):
        super().__init__(paths, name)
        self.phase = float(phase)

    def jones(self) -> np.ndarray:
        return (np.exp(1j * np.deg2rad(self.phase))
                * np.eye(N_POLARIZATIONS, dtype=complex))


class BeamDisplacer(OpticalElement):
    """
    A beam displacer, modeled as a permutation of the labeled modes.

    Parameters
    ----------
    routing: dict
        Maps input modes ``(path, polarization)`` to output modes, e.g.
        ``{(1, "V"): (2, "H"), (2, "H"): (1, "V")}``. Modes not mentioned
        pass unchanged. The map has to be a bijection.
    name: str, optional
        A label.
    """

    def __init__(self, routing: Dict[Mode, Mode], name: str = ""):
        super().__init__(None, name)
        sources = list(routing.keys())
        targets = list(routing.values())
        if len(set(targets)) != len(targets) \
                or set(sources) != set(targets):
            raise ValueError(
                f"Displacer routing {routing} is not a permutation.")
        self.routing = dict(routing)

    def jones(self) -> np.ndarray:
        raise NotImplementedError(
            "A beam displacer mixes paths and has no per-path Jones matrix.")

    def matrix(self, n_paths: int = 2) -> np.ndarray:
        dim = n_paths * N_POLARIZATIONS
        m = np.eye(dim, dtype=complex)
        for (p_in, s_in), (p_out, s_out) in self.routing.items():
            i = mode_index(p_in, s_in, n_paths)
            o = mode_index(p_out, s_out, n_paths)
            m[:, i] = 0
            m[o, i] = 1
        return m


def element_matrix(element: OpticalElement, n_paths: int = 2) \
        -> np.ndarray:
    """
    The unitary of ``element`` on the full path (x) polarization space.

    Parameters
    ----------
    element: OpticalElement
        The element.
    n_paths: int, optional (default = 2)
        Number of paths.

    Returns
    -------
    matrix: np.ndarray
        Read-only ``2 n_paths`` square unitary, basis ordered
        ``(1,H), (1,V), (2,H), ...``.
    """
    m = as_matrix(element.matrix(n_paths))
    if not is_unitary(m, UNITARY_TOL):
        raise ValueError(f"{element} does not have a unitary matrix.")
    return m

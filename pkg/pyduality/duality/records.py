from typing import Dict, Optional
import numpy as np

from ..tomo import McEstimate


IDEAL_TOL = 1e-9
SIGMA_MULTIPLE = 3

#: Quantifier names of a record.
QUANTIFIERS = ("C", "H", "X", "Ps", "P", "V", "D")

GY = "GY"
ENTROPIC = "entropic"
QUADRATIC = "quadratic"
RELATIONS = (GY, ENTROPIC, QUADRATIC)


def entropic_bound(n_paths: int) -> float:
    """
    Entropy of the uniform path distribution, ``log2 N``.
    """
    return float(np.log2(n_paths))


def quadratic_bound(n_paths: int) -> float:
    return (1 - 1 / n_paths) ** 2


class SweepRecord:
    """
    All quantifiers at one detector angle.

    Attributes
    ----------
    theta: float
        Detector angle in degrees.
    n_paths: int
        Number of paths.
    ideal: Dict[str, float]
        ``C, H, X, Ps, P`` and, for two paths, ``V, D``; with
        ``P = Ps - 1/N``, ``V = 2 |rho_12|`` and ``D = 2 (Ps - 1/2)``.
    simulated: Dict[str, McEstimate], optional
        The same quantifiers estimated from simulated counts.
    entropic_bound, quadratic_bound: float
        ``log2 N`` and ``(1 - 1/N)^2``.
    """

    def __init__(self, theta: float, n_paths: int,
                 ideal: Dict[str, float],
                 simulated: Optional[Dict[str, McEstimate]] = None):
        self.theta = float(theta)
        self.n_paths = int(n_paths)
        self.ideal = {k: float(v) for k, v in ideal.items()}
        self.simulated = simulated
        self.entropic_bound = entropic_bound(self.n_paths)
        self.quadratic_bound = quadratic_bound(self.n_paths)

    @property
    def has_simulation(self) -> bool:
        return self.simulated is not None

    def values(self, source: str = "ideal") -> Dict[str, float]:
        """
        Quantifier values of ``source``, ``ideal`` or ``simulated``.
        """
        if source == "ideal":
            return dict(self.ideal)
        if source == "simulated":
            if self.simulated is None:
                raise ValueError(f"No simulation at theta={self.theta}.")
            return {k: v.mean for k, v in self.simulated.items()}
        raise ValueError(f"Unknown source {source!r}.")

    def errors(self, source: str = "ideal") -> Dict[str, float]:
        """
        Standard deviations of ``source``; zero for ideal values.
        """
        if source == "ideal":
            return {k: 0.0 for k in self.ideal}
        self.values(source)
        return {k: v.std_dev for k, v in self.simulated.items()}

    def __repr__(self):
        return (f"<SweepRecord theta={self.theta} N={self.n_paths} "
                f"simulated={self.has_simulation}>")


class DualityVerdict:
    """
    The check of one duality relation on one record.

    Attributes
    ----------
    relation: str
        ``GY``, ``entropic`` or ``quadratic``.
    lhs: float
        Left-hand side of the inequality.
    bound: float
        Right-hand side.
    tolerance: float
        ``1e-9`` for ideal values, three standard deviations of the
        left-hand side for simulated values.
    satisfied: bool
        ``lhs <= bound + tolerance``.
    slack: float
        ``bound - lhs``.
    theta: float
        Detector angle of the record.
    source: str
        ``ideal`` or ``simulated``.
    """

    def __init__(self, relation: str, lhs: float, bound: float,
                 tolerance: float, theta: float = float("nan"),
                 source: str = "ideal"):
        if relation not in RELATIONS:
            raise ValueError(f"Unknown relation {relation!r}.")
        self.relation = relation
        self.lhs = float(lhs)
        self.bound = float(bound)
        self.tolerance = float(tolerance)
        self.satisfied = self.lhs <= self.bound + self.tolerance
        self.slack = self.bound - self.lhs
        self.theta = float(theta)
        self.source = source

    def to_dict(self) -> dict:
        return {"relation": self.relation, "theta": self.theta,
                "source": self.source, "lhs": self.lhs,
                "bound": self.bound, "slack": self.slack,
                "tolerance": self.tolerance, "satisfied": self.satisfied}

    def __repr__(self):
        status = "ok" if self.satisfied else "VIOLATED"
        return (f"<DualityVerdict {self.relation} theta={self.theta:g} "
                f"lhs={self.lhs:.9g} bound={self.bound:.9g} {status}>")

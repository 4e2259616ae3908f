"""
Duality relations
-----------------

* Greenberger-Yasin: ``V^2 + D^2 <= 1`` (two paths only),
* entropic: ``C + H(M:D) <= log2 N``,
* quadratic: ``(P_s - 1/N)^2 + X^2 <= (1 - 1/N)^2``.

Simulated values are checked with a tolerance of three standard
deviations of the left-hand side, propagated linearly from the
Monte-Carlo error bars. The ``*_verdict`` functions work on plain numbers
and are shared with the re-check of figure data files, which raises the
tolerance ``floor`` to cover the rounding of the stored values.
"""

from typing import List
import numpy as np

from .records import (SweepRecord, DualityVerdict, GY, ENTROPIC, QUADRATIC,
                      IDEAL_TOL, SIGMA_MULTIPLE)


def _tolerance(sigma: float, source: str, floor: float) -> float:
    if source == "ideal":
        return floor
    return max(SIGMA_MULTIPLE * sigma, floor)


def quadratic_verdict(p: float, x: float, bound: float,
                      sigma_p: float = 0.0, sigma_x: float = 0.0,
                      theta: float = float("nan"),
                      source: str = "ideal",
                      floor: float = IDEAL_TOL) -> DualityVerdict:
    lhs = p ** 2 + x ** 2
    sigma = np.hypot(2 * p * sigma_p, 2 * x * sigma_x)
    tol = _tolerance(sigma, source, floor)
    return DualityVerdict(QUADRATIC, lhs, bound, tol, theta, source)


def entropic_verdict(c: float, h: float, bound: float,
                     sigma_c: float = 0.0, sigma_h: float = 0.0,
                     theta: float = float("nan"),
                     source: str = "ideal",
                     floor: float = IDEAL_TOL) -> DualityVerdict:
    sigma = np.hypot(sigma_c, sigma_h)
    tol = _tolerance(sigma, source, floor)
    return DualityVerdict(ENTROPIC, c + h, bound, tol, theta, source)


def gy_verdict(v: float, d: float,
               sigma_v: float = 0.0, sigma_d: float = 0.0,
               theta: float = float("nan"),
               source: str = "ideal",
               floor: float = IDEAL_TOL) -> DualityVerdict:
    lhs = v ** 2 + d ** 2
    sigma = np.hypot(2 * v * sigma_v, 2 * d * sigma_d)
    tol = _tolerance(sigma, source, floor)
    return DualityVerdict(GY, lhs, 1.0, tol, theta, source)


def verify_quadratic(record: SweepRecord,
                     source: str = "ideal") -> DualityVerdict:
    v, e = record.values(source), record.errors(source)
    return quadratic_verdict(v["P"], v["X"], record.quadratic_bound,
                             e["P"], e["X"], record.theta, source)


def verify_entropic(record: SweepRecord,
                    source: str = "ideal") -> DualityVerdict:
    v, e = record.values(source), record.errors(source)
    return entropic_verdict(v["C"], v["H"], record.entropic_bound,
                            e["C"], e["H"], record.theta, source)


def verify_gy(record: SweepRecord, source: str = "ideal") -> DualityVerdict:
    if record.n_paths != 2:
        raise ValueError("The visibility relation is defined for two paths.")
    v, e = record.values(source), record.errors(source)
    return gy_verdict(v["V"], v["D"], e["V"], e["D"], record.theta, source)


def verify_all(record: SweepRecord,
               source: str = "ideal") -> List[DualityVerdict]:
    """
    Every relation that applies to ``record``.
    """
    verdicts = []
    if record.n_paths == 2:
        verdicts.append(verify_gy(record, source))
    verdicts.append(verify_entropic(record, source))
    verdicts.append(verify_quadratic(record, source))
    return verdicts

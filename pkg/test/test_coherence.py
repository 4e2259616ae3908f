import numpy as np
import pytest

from pyduality.coherence import (relent_coherence, l1_coherence,
                                 coherence_report, CoherenceReport)
from pyduality.optics import target_state
from pyduality.qmath import (DensityMatrix, DimensionMismatchError,
                             binary_entropy, random_density_matrix)


def test_relent_coherence():
    assert relent_coherence(target_state(0)) == pytest.approx(1)
    assert relent_coherence(DensityMatrix.maximally_mixed(2)) == 0
    assert relent_coherence(target_state(30)) == pytest.approx(0.188722,
                                                               abs=1e-6)
    assert relent_coherence(target_state(30)) == \
        pytest.approx(1 - binary_entropy(0.75), abs=1e-12)


def test_l1_coherence():
    assert l1_coherence(target_state(0)) == pytest.approx(1)
    assert l1_coherence(DensityMatrix.maximally_mixed(2)) == 0
    assert l1_coherence(target_state(30)) / 2 == pytest.approx(0.25)


def test_coherence_is_non_negative_for_random_states():
    for seed in range(20):
        rho = random_density_matrix(3, seed)
        assert relent_coherence(rho) >= 0
        assert l1_coherence(rho) >= 0
        assert relent_coherence(rho.diag()) == 0


def test_coherence_report():
    report = coherence_report(target_state(0))
    assert (report.c_relent, report.c_l1, report.x) == \
        pytest.approx((1, 1, .5))
    report = coherence_report(target_state(45))
    assert (report.c_relent, report.c_l1, report.x) == \
        pytest.approx((0, 0, 0), abs=1e-12)
    assert coherence_report(target_state(22.5)).x == \
        pytest.approx(0.3535534, abs=1e-7)


def test_coherence_report_accepts_arrays():
    report = coherence_report(np.eye(3) / 3, 3)
    assert isinstance(report, CoherenceReport)
    assert report.to_dict() == {"c_relent": 0.0, "c_l1": 0.0, "x": 0.0,
                                "n_paths": 3}


def test_coherence_report_dimension_mismatch():
    with pytest.raises(DimensionMismatchError):
        coherence_report(target_state(10), 3)


def test_coherence_decreases_with_angle():
    rhos = [target_state(theta) for theta in np.linspace(0, 45, 19)]
    relent = [relent_coherence(rho) for rho in rhos]
    l1 = [l1_coherence(rho) for rho in rhos]
    assert np.all(np.diff(relent) < 0)
    assert np.all(np.diff(l1) < 0)


@pytest.mark.parametrize("seed", range(5))
def test_coherence_invariant_under_diagonal_unitaries(seed):
    rng = np.random.default_rng(seed)
    rho = random_density_matrix(3, seed)
    phases = np.diag(np.exp(1j * rng.uniform(0, 2 * np.pi, 3)))
    rotated = rho.conjugate_by(phases)
    assert relent_coherence(rotated) == \
        pytest.approx(relent_coherence(rho), abs=1e-10)
    assert l1_coherence(rotated) == \
        pytest.approx(l1_coherence(rho), abs=1e-10)

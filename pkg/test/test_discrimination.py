import numpy as np
import pytest

from pyduality.discrimination import (Povm, InvalidPovmError,
                                      helstrom_povm,
                                      helstrom_success_probability,
                                      pretty_good_povm, success_probability,
                                      joint_distribution, mutual_information,
                                      discriminate,
                                      random_measurement_bound)
from pyduality.duality import closed_form
from pyduality.optics import (detector_states, detector_state,
                              symmetric_detector_states)
from pyduality.qmath import (PureState, binary_entropy,
                             random_density_matrix)
from pyduality.sampler import MulticoreSampler

GRID = np.linspace(0, 45, 19)
PLUS = np.array([[1, 1], [1, 1]]) / 2
MINUS = np.array([[1, -1], [-1, 1]]) / 2


def test_povm_validation():
    with pytest.raises(InvalidPovmError):
        Povm([])
    with pytest.raises(InvalidPovmError):
        Povm([np.eye(2) / 2])
    with pytest.raises(InvalidPovmError):
        Povm([np.diag([1.5, 1]), np.diag([-0.5, 0])])
    with pytest.raises(InvalidPovmError):
        Povm([[[0, 1], [0, 0]], [[1, -1], [0, 1]]])
    with pytest.raises(InvalidPovmError):
        Povm([np.eye(2)], labels=["a", "b"])
    povm = Povm([PLUS, MINUS])
    assert povm.labels == [1, 2]
    assert len(povm) == 2 and povm.dim == 2
    assert np.allclose(povm.probabilities(
        PureState([1, 0]).to_density()), [.5, .5])


def test_helstrom_at_45_degrees():
    povm = helstrom_povm(*detector_states(45))
    assert np.allclose(povm[0], PLUS)
    assert np.allclose(povm[1], MINUS)
    assert not povm.degenerate
    assert success_probability(povm, detector_states(45)) == \
        pytest.approx(1)


def test_helstrom_projectors_do_not_depend_on_angle():
    povm = helstrom_povm(*detector_states(22.5))
    assert np.allclose(povm[0], PLUS)
    assert np.allclose(povm[1], MINUS)


def test_helstrom_degenerate():
    povm = helstrom_povm(*detector_states(0))
    assert povm.degenerate
    assert success_probability(povm, detector_states(0)) == \
        pytest.approx(0.5)


def test_helstrom_priors():
    with pytest.raises(ValueError):
        helstrom_povm(*detector_states(10), priors=(0.6, 0.6))
    eta1, eta2 = detector_states(0)
    assert helstrom_success_probability(eta1, eta2, (0.8, 0.2)) == \
        pytest.approx(0.8)


@pytest.mark.parametrize("theta", GRID)
def test_success_probability_matches_closed_form(theta):
    states = detector_states(theta)
    ps = success_probability(helstrom_povm(*states), states)
    assert ps == pytest.approx(
        (1 + np.sin(np.deg2rad(2 * theta))) / 2, abs=1e-12)
    overlap = abs(states[0].inner(states[1]))
    assert ps == pytest.approx((1 + np.sqrt(1 - overlap ** 2)) / 2,
                               abs=1e-12)
    assert helstrom_success_probability(*states) == pytest.approx(ps)


def test_success_probability_at_22_5():
    states = detector_states(22.5)
    assert success_probability(helstrom_povm(*states), states) == \
        pytest.approx(0.8535534, abs=1e-7)


def test_joint_distribution():
    for theta, expected in ((45, np.diag([.5, .5])),
                            (0, np.full((2, 2), .25))):
        states = detector_states(theta)
        assert np.allclose(
            joint_distribution(helstrom_povm(*states), states), expected)
    states = detector_states(22.5)
    joint = joint_distribution(helstrom_povm(*states), states)
    assert joint[0, 0] == pytest.approx(0.4267767, abs=1e-7)
    assert joint[0, 1] == pytest.approx(0.0732233, abs=1e-7)
    assert np.allclose(joint, closed_form.joint_table(22.5))


@pytest.mark.parametrize("theta", [0, 10, 22.5, 30, 45])
def test_joint_rows_are_detector_marginals(theta):
    states = detector_states(theta)
    povm = helstrom_povm(*states)
    rows = joint_distribution(povm, states).sum(axis=1)
    rho_det = detector_state(theta)
    assert np.allclose(rows, [rho_det.expectation(pi)
                              for pi in povm.elements], atol=1e-12)


def test_mutual_information():
    assert mutual_information(np.diag([.5, .5])) == pytest.approx(1)
    assert mutual_information(np.full((2, 2), .25)) == pytest.approx(0)
    joint = closed_form.joint_table(22.5)
    assert mutual_information(joint) == pytest.approx(0.3991240, abs=1e-6)
    assert mutual_information(joint) == \
        pytest.approx(1 - binary_entropy(np.trace(joint)), abs=1e-10)
    with pytest.raises(ValueError):
        mutual_information([[.5, .5], [.5, .5]])
    with pytest.raises(ValueError):
        mutual_information([.5, .5])


def test_pretty_good_matches_helstrom_for_two_states():
    states = detector_states(22.5)
    ps = success_probability(pretty_good_povm(states), states)
    assert ps == pytest.approx(0.8535534, abs=1e-7)
    assert ps == pytest.approx(
        success_probability(helstrom_povm(*states), states), abs=1e-10)


def test_pretty_good_orthogonal_ensemble():
    states = [PureState.basis(3, k) for k in range(3)]
    assert success_probability(pretty_good_povm(states), states) == \
        pytest.approx(1)


def test_pretty_good_beats_brute_force_grid():
    """
    Symmetric states with real overlap: no real rotation of the
    computational basis does better than the square-root measurement.
    """
    states = symmetric_detector_states(3, 0.4)
    ps = success_probability(pretty_good_povm(states), states)
    best = 0
    angles = np.linspace(0, np.pi, 13)
    for a in angles:
        for b in angles:
            for c in angles:
                u = _rotation(a, b, c)
                povm = Povm([np.outer(u[:, k], u[:, k]) for k in range(3)])
                best = max(best, success_probability(povm, states))
    assert ps >= best - 1e-9


def _rotation(a, b, c):
    def rz(t):
        return np.array([[np.cos(t), -np.sin(t), 0],
                         [np.sin(t), np.cos(t), 0], [0, 0, 1]])

    def rx(t):
        return np.array([[1, 0, 0], [0, np.cos(t), -np.sin(t)],
                         [0, np.sin(t), np.cos(t)]])
    return rz(a) @ rx(b) @ rz(c)


@pytest.mark.parametrize("dim, n, seed", [
    (2, 2, 0), (2, 3, 1), (3, 3, 2), (3, 4, 3), (4, 3, 4), (4, 5, 5)])
def test_pretty_good_is_complete_for_random_ensembles(dim, n, seed):
    rng = np.random.default_rng(seed)
    states = [random_density_matrix(dim, rng, rank=1) for _ in range(n)]
    priors = rng.dirichlet(np.ones(n))
    povm = pretty_good_povm(states, priors)
    assert np.allclose(sum(povm.elements), np.eye(dim), atol=1e-9)
    assert povm.pseudo_inverse == (n < dim)


def test_pretty_good_singular_ensemble():
    states = [PureState([1, 0, 0]), PureState([0, 1, 0])]
    povm = pretty_good_povm(states)
    assert povm.pseudo_inverse
    assert np.allclose(sum(povm.elements), np.eye(3))
    with pytest.raises(ValueError):
        pretty_good_povm(states[:1])


def test_discriminate():
    result = discriminate(detector_states(45))
    assert result.p_success == pytest.approx(1)
    assert result.mutual_info == pytest.approx(1)
    assert result.h_d == pytest.approx(1)
    assert np.allclose(result.priors, [.5, .5])
    result = discriminate(symmetric_detector_states(3, 0.0))
    assert result.p_success == pytest.approx(1)
    assert result.mutual_info == pytest.approx(np.log2(3))


def test_ensemble_size_mismatch():
    with pytest.raises(ValueError):
        success_probability(helstrom_povm(*detector_states(10)),
                            symmetric_detector_states(3, 0.1))


@pytest.mark.parametrize("theta", GRID)
def test_helstrom_beats_random_measurements(theta):
    states = detector_states(theta)
    ps = success_probability(helstrom_povm(*states), states)
    assert random_measurement_bound(states, n_trials=1000, seed=1) <= \
        ps + 1e-12


def test_random_measurement_bound_is_sampler_independent():
    states = detector_states(20)
    assert random_measurement_bound(states, n_trials=50, seed=3) == \
        random_measurement_bound(states, n_trials=50, seed=3,
                                 sampler=MulticoreSampler(n_procs=2))

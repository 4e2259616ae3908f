import numpy as np
import pytest

from pyduality.qmath import (DensityMatrix, PureState, InvalidStateError,
                             NotHermitianError, DimensionMismatchError,
                             tensor, partial_trace, eigh, FIRST, SECOND,
                             von_neumann_entropy, shannon_entropy,
                             binary_entropy, fidelity, is_unitary,
                             equal_up_to_phase, random_unitary,
                             random_density_matrix,
                             random_projective_measurement)
from pyduality.optics import target_state


def test_density_matrix_validation():
    with pytest.raises(InvalidStateError):
        DensityMatrix(np.eye(2))
    with pytest.raises(NotHermitianError):
        DensityMatrix([[0.5, 0.5], [0, 0.5]])
    with pytest.raises(InvalidStateError):
        DensityMatrix([[1.5, 0], [0, -0.5]])
    with pytest.raises(ValueError):
        DensityMatrix([[np.nan, 0], [0, 1]])


def test_density_matrix_is_read_only():
    rho = DensityMatrix.maximally_mixed(2)
    with pytest.raises(ValueError):
        rho.matrix[0, 0] = 1


def test_from_operator_normalizes():
    rho = DensityMatrix.from_operator([[2, 1j], [-1j, 2]])
    assert np.isclose(np.trace(rho.matrix), 1)
    assert np.allclose(rho.matrix, rho.matrix.conj().T)


def test_pure_state():
    with pytest.raises(InvalidStateError):
        PureState([1, 1])
    psi = PureState.from_unnormalized([1, 1])
    assert np.isclose(abs(psi.inner(PureState.basis(2, 0))) ** 2, 0.5)
    assert np.isclose(np.trace(psi.projector()), 1)
    with pytest.raises(ValueError):
        PureState.basis(2, 2)


def test_tensor_and_partial_trace():
    a = DensityMatrix([[0.7, 0.2], [0.2, 0.3]])
    b = DensityMatrix.maximally_mixed(3)
    joint = DensityMatrix(tensor(a.matrix, b.matrix))
    assert joint.dim == 6
    assert np.allclose(partial_trace(joint, (2, 3), FIRST).matrix, a.matrix)
    assert np.allclose(partial_trace(joint, (2, 3), SECOND).matrix,
                       b.matrix)
    with pytest.raises(DimensionMismatchError):
        partial_trace(joint, (2, 2))


def test_partial_trace_of_bell_state_is_mixed():
    bell = PureState.from_unnormalized([1, 0, 0, 1]).to_density()
    reduced = partial_trace(bell, (2, 2))
    assert np.allclose(reduced.matrix, np.eye(2) / 2)
    assert np.isclose(von_neumann_entropy(bell), 0, atol=1e-10)
    assert np.isclose(von_neumann_entropy(reduced), 1)


def test_eigh_descending():
    vals, vecs = eigh(np.diag([0.1, 0.6, 0.3]))
    assert np.allclose(vals, [0.6, 0.3, 0.1])
    m = vecs @ np.diag(vals) @ vecs.conj().T
    assert np.allclose(m, np.diag([0.1, 0.6, 0.3]))
    with pytest.raises(NotHermitianError):
        eigh([[0, 1], [0, 0]])


def test_eigh_of_target_state():
    vals, vecs = eigh(target_state(30))
    assert np.allclose(vals, [0.75, 0.25])
    assert np.allclose(np.abs(vecs), np.full((2, 2), 1 / np.sqrt(2)))


@pytest.mark.parametrize("seed", range(5))
def test_eigh_reconstructs_hermitian(seed):
    rng = np.random.default_rng(seed)
    a = rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4))
    m = a + a.conj().T
    vals, vecs = eigh(m)
    assert np.all(np.diff(vals) <= 0)
    assert is_unitary(vecs, atol=1e-10)
    assert np.allclose(vecs @ np.diag(vals) @ vecs.conj().T, m)


def test_entropies():
    assert shannon_entropy([0.5, 0.5]) == pytest.approx(1)
    assert shannon_entropy([1, 0]) == pytest.approx(0)
    assert shannon_entropy([-1e-13, 1]) == pytest.approx(0)
    with pytest.raises(ValueError):
        shannon_entropy([-0.1, 1.1])
    assert binary_entropy(0.75) == pytest.approx(0.8112781245)
    assert von_neumann_entropy(DensityMatrix.maximally_mixed(4)) == \
        pytest.approx(2)


@pytest.mark.parametrize("dim, seed", [(2, 0), (3, 1), (4, 2), (4, 3)])
def test_entropy_is_unitarily_invariant(dim, seed):
    rho = random_density_matrix(dim, seed)
    rotated = rho.conjugate_by(random_unitary(dim, seed + 10))
    assert von_neumann_entropy(rotated) == \
        pytest.approx(von_neumann_entropy(rho), abs=1e-9)


def test_fidelity():
    rho = random_density_matrix(3, 1)
    assert fidelity(rho, rho) == pytest.approx(1, abs=1e-9)
    h = PureState.basis(2, 0).to_density()
    v = PureState.basis(2, 1).to_density()
    assert fidelity(h, v) == pytest.approx(0, abs=1e-12)
    assert fidelity(h, DensityMatrix.maximally_mixed(2)) == \
        pytest.approx(0.5)
    with pytest.raises(DimensionMismatchError):
        fidelity(h, rho)


def test_equal_up_to_phase():
    u = random_unitary(3, 4)
    assert is_unitary(u)
    assert equal_up_to_phase(np.exp(0.7j) * u, u)
    assert not equal_up_to_phase(u, u.T.conj() @ u)


@pytest.mark.parametrize("dim", [1, 2, 4])
def test_random_objects_are_reproducible(dim):
    assert np.allclose(random_unitary(dim, 3), random_unitary(dim, 3))
    a = random_density_matrix(dim, 3)
    b = random_density_matrix(dim, np.random.default_rng(3))
    assert np.allclose(a.matrix, b.matrix)
    projectors = random_projective_measurement(dim, 5)
    assert np.allclose(sum(projectors), np.eye(dim))


def test_random_density_matrix_rank():
    rho = random_density_matrix(4, 0, rank=1)
    assert np.isclose(np.trace(rho.matrix @ rho.matrix).real, 1)

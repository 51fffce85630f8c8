import numpy as np
import pytest

from jtqes.fock import SectorParams, build_sector_hamiltonian
from jtqes.jacobi import SymmetricMatrix, symmetric_eigen


def test_closed_form_two_by_two():
    w, v = symmetric_eigen([[2.0, 1.0], [1.0, 2.0]])
    assert np.allclose(w, [1.0, 3.0], atol=1e-12)
    assert np.allclose(v.T @ v, np.eye(2), atol=1e-12)


def test_diagonal_matrix_sorted():
    w, _ = symmetric_eigen(np.diag([3.0, -1.0, 2.0]))
    assert np.allclose(w, [-1.0, 2.0, 3.0], atol=0)


def test_decoupled_sector_matrix_is_its_diagonal():
    # kappa = 0 decouples: eigenvalues are the sorted diagonal entries
    h = np.array(build_sector_hamiltonian(SectorParams(j=0, mu=0, kappa=0.0), 24))
    assert h.shape[0] == 50
    w, _ = symmetric_eigen(h)
    assert np.allclose(w, np.sort(np.diag(h)), atol=1e-12)


def test_orthonormality_and_trace_identity():
    rng = np.random.default_rng(7)
    a = rng.normal(size=(40, 40))
    a = (a + a.T) / 2
    w, v = symmetric_eigen(a, tol=1e-13)
    assert np.allclose(v.T @ v, np.eye(40), atol=1e-10)
    assert abs(np.trace(a) - np.sum(w)) <= 1e-10 * max(1.0, abs(np.trace(a)))


def test_reconstruction_residual_bound():
    rng = np.random.default_rng(11)
    a = rng.normal(size=(30, 30))
    a = (a + a.T) / 2
    tol = 1e-12
    w, v = symmetric_eigen(a, tol=tol)
    norm = np.linalg.norm(a)
    assert np.linalg.norm(a @ v - v @ np.diag(w)) <= 10 * tol * norm


def test_agrees_with_lapack():
    rng = np.random.default_rng(13)
    a = rng.normal(size=(25, 25))
    a = (a + a.T) / 2
    w, _ = symmetric_eigen(a)
    assert np.allclose(w, np.linalg.eigvalsh(a), atol=1e-9)


def test_rejects_nonfinite():
    with pytest.raises(ValueError):
        symmetric_eigen([[np.inf, 0.0], [0.0, 1.0]])


def test_symmetric_matrix_wrapper():
    with pytest.raises(ValueError):
        SymmetricMatrix([[1.0, 2.0], [3.0, 4.0]])
    m = SymmetricMatrix([[1.0, 2.0], [2.0, 4.0]])
    assert m.dimension == 2
    assert np.array_equal(np.array(m), np.array(m).T)

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.linalg import expm

from conftest import random_complex
from oracles import expm_taylor, jacobi_singular_values
from quantlog.errors import DimensionMismatch, EigOnNegativeRealAxis, IllConditionedEigenbasis, NotHermitian, SingularMatrix
from quantlog.io import random_hermitian
from quantlog.matcore import (
    as_matrix,
    condition_number,
    eigendecompose_hermitian,
    inverse,
    is_hermitian,
    reference_log,
    spectral_norm,
)


def test_as_matrix_rejects_non_square():
    with pytest.raises(DimensionMismatch):
        as_matrix(np.zeros((2, 3)))
    with pytest.raises(DimensionMismatch):
        as_matrix(np.zeros((0, 0)))


def test_hermitian_check_threshold():
    A = np.array([[1.0, 0.5], [0.5, 1.0]], dtype=complex)
    assert is_hermitian(A)
    A[0, 1] += 2e-12
    assert not is_hermitian(A)
    A[0, 1] -= 1.5e-12
    assert is_hermitian(A)


class TestSpectralNorm:
    def test_identity(self):
        assert spectral_norm(np.eye(2)) == pytest.approx(1.0, abs=1e-15)

    def test_diagonal(self):
        assert spectral_norm(np.diag([1.5, 0.5]) - np.eye(2)) == pytest.approx(0.5, rel=1e-12)

    def test_matches_jacobi_svd(self, rng):
        for _ in range(5):
            A = random_complex(rng, 4, 4)
            oracle = jacobi_singular_values(A)[0]
            assert spectral_norm(A) == pytest.approx(oracle, rel=1e-10)

    def test_jacobi_oracle_itself_agrees_with_lapack(self, rng):
        A = random_complex(rng, 5, 5)
        np.testing.assert_allclose(jacobi_singular_values(A), np.linalg.svd(A, compute_uv=False), rtol=1e-12)


class TestInverse:
    def test_identity(self):
        np.testing.assert_array_equal(inverse(np.eye(4)), np.eye(4))

    def test_diagonal(self):
        np.testing.assert_allclose(inverse(np.diag([1.25, 0.75])), np.diag([0.8, 4 / 3]), rtol=1e-15)

    def test_residual(self, rng):
        A = random_complex(rng, 8, 8) + 8 * np.eye(8)
        kappa = condition_number(A)
        assert np.linalg.norm(A @ inverse(A) - np.eye(8), 2) <= 1e-10 * kappa

    def test_involution(self, rng):
        A = random_complex(rng, 6, 6) + 4 * np.eye(6)
        kappa = condition_number(A)
        assert np.max(np.abs(inverse(inverse(A)) - A)) <= 1e-8 * kappa**2

    def test_singular(self):
        with pytest.raises(SingularMatrix):
            inverse(np.array([[1.0, 2.0], [2.0, 4.0]]))


class TestEigendecomposeHermitian:
    def test_diagonal(self):
        w, V = eigendecompose_hermitian(np.diag([2.0, 3.0]))
        np.testing.assert_allclose(w, [2.0, 3.0])
        np.testing.assert_allclose(np.abs(V), np.eye(2), atol=1e-15)

    def test_two_by_two(self):
        # characteristic polynomial (1 - l)^2 - 0.09 = 0
        w, _ = eigendecompose_hermitian(np.array([[1.0, 0.3], [0.3, 1.0]]))
        np.testing.assert_allclose(w, [0.7, 1.3], atol=1e-14)

    def test_reconstruction(self, rng):
        B = random_complex(rng, 8, 8)
        A = B + B.conj().T
        w, V = eigendecompose_hermitian(A)
        nA = spectral_norm(A)
        assert np.max(np.abs(A @ V - V * w)) <= 1e-10 * nA
        assert np.max(np.abs(V.conj().T @ V - np.eye(8))) <= 1e-10

    def test_rejects_non_hermitian(self):
        with pytest.raises(NotHermitian):
            eigendecompose_hermitian(np.array([[1.0, 1.0], [0.0, 1.0]]))


class TestReferenceLog:
    def test_identity(self):
        np.testing.assert_array_equal(reference_log(np.eye(2)), np.zeros((2, 2)))

    def test_diagonal(self):
        L = reference_log(np.diag([1.5, 0.5]))
        np.testing.assert_allclose(np.diag(L).real, [0.4054651081081644, -0.6931471805599453], rtol=1e-14)

    def test_round_trip_hermitian(self):
        V = np.array([[1, 1j], [1j, 1]]) / np.sqrt(2)
        A = V @ np.diag([0.6, 1.4]) @ V.conj().T
        np.testing.assert_allclose(expm(reference_log(A)), A, atol=1e-8 * spectral_norm(A))
        np.testing.assert_allclose(expm_taylor(reference_log(A)), A, atol=1e-8 * spectral_norm(A))

    def test_round_trip_non_hermitian(self, rng):
        T = rng.standard_normal((4, 4)) * 0.1 + np.eye(4)
        A = T @ np.diag([0.7, 1.1, 1.3 + 0.2j, 0.9]) @ np.linalg.inv(T)
        assert not np.allclose(A, A.conj().T)
        np.testing.assert_allclose(expm(reference_log(A)), A, atol=1e-8 * spectral_norm(A))

    def test_negative_eigenvalue(self):
        with pytest.raises(EigOnNegativeRealAxis):
            reference_log(np.diag([1.0, -0.5]))
        with pytest.raises(EigOnNegativeRealAxis):
            reference_log(np.array([[0.0, 1.0], [0.0, 0.0]]) + np.diag([1.0, -1.0]))

    def test_ill_conditioned_eigenbasis(self):
        A = np.array([[1.0, 1.0], [0.0, 1.0 + 1e-9]])
        with pytest.raises(IllConditionedEigenbasis):
            reference_log(A)


def test_norm_of_shift_is_max_eigen_distance(corpus):
    for _, rho, A, _ in corpus:
        w, _ = eigendecompose_hermitian(A)
        assert spectral_norm(A - np.eye(A.shape[0])) == pytest.approx(np.max(np.abs(w - 1.0)), rel=1e-12)
        assert spectral_norm(A - np.eye(A.shape[0])) == pytest.approx(rho, rel=1e-12)


def test_exp_log_round_trip_on_corpus(corpus):
    for _, _, A, _ in corpus:
        np.testing.assert_allclose(expm(reference_log(A)), A, atol=1e-8 * spectral_norm(A))


@settings(max_examples=40, deadline=None)
@given(n=st.sampled_from([2, 3, 5]), rho=st.floats(0.0, 0.95), seed=st.integers(0, 2**31))
def test_log_round_trip_property(n, rho, seed):
    A = random_hermitian(n, rho, seed)
    np.testing.assert_allclose(expm(reference_log(A)), A, atol=1e-8 * spectral_norm(A))

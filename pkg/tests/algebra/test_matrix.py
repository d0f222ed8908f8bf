from math import cos, pi, sin

import numpy as np
from pytest import raises

from temporal_homogenization import (
    conjugate,
    mat_exp,
    DimensionError,
    ExpOverflow,
    InvalidParameter,
)


def describe_mat_exp():
    def returns_identity_for_zero_matrix():
        assert np.array_equal(mat_exp(np.zeros((2, 2)), 5.0), np.eye(2))

    def exponentiates_rotation_generator():
        theta = pi / 3
        A = np.array([[0.0, theta], [-theta, 0.0]])
        expected = np.array([[cos(theta), sin(theta)], [-sin(theta), cos(theta)]])
        assert np.allclose(mat_exp(A, 1.0), expected, rtol=0, atol=1e-14)

    def exponentiates_diagonal_matrix():
        result = mat_exp(np.diag([1.0, -2.0]), 0.5)
        assert np.allclose(result, np.diag([np.exp(0.5), np.exp(-1.0)]), rtol=1e-14)

    def promotes_scalars():
        assert np.allclose(mat_exp(-1.0, 2.0), [[np.exp(-2.0)]], rtol=1e-14)

    def has_group_property():
        rng = np.random.default_rng(7)
        for _ in range(10):
            A = rng.standard_normal((3, 3))
            A *= 5 / np.linalg.norm(A, 2) * rng.uniform(0.1, 1)
            s, t = rng.uniform(-5, 5, 2)
            product = mat_exp(A, s) @ mat_exp(A, t)
            expected = mat_exp(A, s + t)
            assert np.linalg.norm(product - expected) <= 1e-10 * np.linalg.norm(
                expected
            )
            inverse = mat_exp(A, t) @ mat_exp(A, -t)
            assert np.allclose(inverse, np.eye(3), rtol=0, atol=1e-10)

    def raises_on_overflow():
        with raises(ExpOverflow):
            mat_exp(np.eye(2), 1000.0)

    def rejects_non_square_matrices():
        with raises(DimensionError):
            mat_exp(np.ones((2, 3)), 1.0)

    def rejects_non_finite_time():
        with raises(InvalidParameter):
            mat_exp(np.eye(2), float("nan"))


def describe_conjugate():
    def keeps_matrix_under_identity():
        M = np.arange(4.0).reshape(2, 2)
        assert np.array_equal(conjugate(np.eye(2), np.eye(2), M), M)

    def keeps_identity_under_any_basis():
        W = np.array([[2.0, 1.0], [1.0, 1.0]])
        assert np.allclose(conjugate(W, np.linalg.inv(W), np.eye(2)), np.eye(2))

    def computes_w_inverse_m_w():
        W = np.array([[1.0, 2.0], [0.0, 1.0]])
        W_inv = np.linalg.inv(W)
        M = np.array([[1.0, 0.0], [3.0, 4.0]])
        assert np.allclose(conjugate(W, W_inv, M), W_inv @ M @ W)

    def rejects_shape_mismatch():
        with raises(DimensionError):
            conjugate(np.eye(2), np.eye(2), np.eye(3))

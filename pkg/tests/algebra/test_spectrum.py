import numpy as np
from pytest import raises

from temporal_homogenization import (
    conjugate,
    spectral_decompose,
    DefectiveMatrix,
    SpectralBlock,
)

from ..utils import random_diagonalizable


def block_eigenvalues(spectrum):
    values = []
    for block in spectrum.blocks:
        for _ in range(block.multiplicity):
            if block.size == 1:
                values.append(complex(block.lam))
            else:
                values.append(complex(block.lam, block.mu))
                values.append(complex(block.lam, -block.mu))
    return np.array(values)


def describe_spectral_decompose():
    def splits_diagonal_matrix():
        spectrum = spectral_decompose(np.diag([3.0, -1.0]))
        assert spectrum.blocks == (
            SpectralBlock(3.0, 0.0, 1),
            SpectralBlock(-1.0, 0.0, 1),
        )
        assert np.allclose(np.abs(spectrum.V), np.eye(2))
        assert spectrum.residual <= 1e-14

    def finds_rotation_block_of_harmonic_oscillator():
        omega = 2.0
        A = np.array([[0.0, 1.0], [-(omega**2), 0.0]])
        spectrum = spectral_decompose(A)
        (block,) = spectrum.blocks
        assert block.size == 2
        assert abs(block.lam) < 1e-12
        assert abs(block.mu - omega) < 1e-12
        J = conjugate(spectrum.V, spectrum.V_inv, A)
        assert np.allclose(J, [[0.0, omega], [-omega, 0.0]], atol=1e-12)

    def refuses_jordan_block():
        with raises(DefectiveMatrix):
            spectral_decompose(np.array([[0.0, 1.0], [0.0, 0.0]]))

    def clusters_repeated_eigenvalues():
        spectrum = spectral_decompose(np.diag([2.0, 2.0, -1.0]))
        assert spectrum.blocks[0] == SpectralBlock(2.0, 0.0, 1, 2)
        assert spectrum.J.shape == (3, 3)

    def orders_blocks_by_decreasing_real_part():
        A = np.diag([-3.0, 1.0, 0.5])
        assert [block.lam for block in spectral_decompose(A).blocks] == [1.0, 0.5, -3.0]

    def reassembles_the_matrix():
        rng = np.random.default_rng(11)
        for dim in range(1, 7):
            A = rng.standard_normal((dim, dim))
            spectrum = spectral_decompose(A)
            assert np.linalg.norm(spectrum.A - A) <= 1e-8 * np.linalg.norm(A)

    def matches_roots_of_characteristic_polynomial():
        rng = np.random.default_rng(5)
        for dim in range(2, 7):
            A = rng.standard_normal((dim, dim))
            coefficients = np.poly(A)
            companion = np.diag(np.ones(dim - 1), -1)
            companion[0] = -coefficients[1:]
            roots = np.linalg.eigvals(companion)
            values = block_eigenvalues(spectral_decompose(A))
            assert values.size == dim
            for value in values:
                assert np.min(np.abs(roots - value)) < 1e-7 * max(1.0, abs(value))

    def diagonalizes_over_complex_field():
        rng = np.random.default_rng(3)
        A = random_diagonalizable(rng, 4, -0.2)
        S, S_inv, nu = spectral_decompose(A).complex_modes()
        assert np.allclose(S @ np.diag(nu) @ S_inv, A, atol=1e-10)
        assert np.allclose(nu.real, -0.2, atol=1e-10)

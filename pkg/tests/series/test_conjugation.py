import numpy as np

from temporal_homogenization import (
    conjugate_series,
    evaluate,
    fourier_evaluate,
    make_fourier_matrix,
    mat_exp,
    spectral_decompose,
)
from temporal_homogenization.control import mathieu_matrices
from temporal_homogenization.series import add_series

from ..utils import bounded_instances, random_fourier


def conjugated(A, P, t):
    return mat_exp(A, -t) @ fourier_evaluate(P, t) @ mat_exp(A, t)


def describe_conjugate_series():
    def keeps_modes_when_conjugating_by_identity():
        cos = np.array([[1.0, 2.0], [0.0, -1.0]])
        sin = np.array([[0.0, 1.0], [3.0, 0.0]])
        P = make_fourier_matrix(1.5, [(1, cos, sin)])
        series = conjugate_series(spectral_decompose(np.zeros((2, 2))), P)
        (term,) = series.terms
        assert term.key == (0.0, 1.5, 0)
        assert np.allclose(term.ccos, cos)
        assert np.allclose(term.dsin, sin)

    def expands_mathieu_perturbation():
        omega = 1.7
        A, P = mathieu_matrices(omega)
        series = conjugate_series(spectral_decompose(A), P)
        assert {term.a for term in series.terms} == {0.0}
        assert {term.k for term in series.terms} == {0}
        frequencies = sorted(term.b for term in series.terms)
        assert np.allclose(frequencies, [0.0, 2 * omega, 4 * omega])
        constant = series.terms[0]
        assert constant.b == 0
        expected = -0.25 * np.array([[0.0, 1.0], [omega**2, 0.0]])
        assert np.allclose(constant.ccos, expected, atol=1e-12)

    def reproduces_mathieu_perturbation_at_zero():
        A, P = mathieu_matrices(2.0, 0.4)
        series = conjugate_series(spectral_decompose(A), P)
        assert np.allclose(evaluate(series, 0.0), fourier_evaluate(P, 0.0), atol=1e-12)

    def finds_growing_rate_of_coupled_saddle():
        A = np.diag([1.0, -1.0])
        coefficient = np.array([[0.0, 0.0], [1.0, 0.0]])
        P = make_fourier_matrix(1.0, [(0, coefficient, np.zeros((2, 2)))])
        series = conjugate_series(spectral_decompose(A), P)
        assert series.keys == [(2.0, 0.0, 0)]
        times = np.linspace(0, 3, 100)
        samples = np.array([conjugated(A, P, t)[1, 0] for t in times])
        slope, intercept = np.polyfit(times, np.log(samples), 1)
        assert abs(slope - 2) < 1e-10
        assert abs(intercept) < 1e-10

    def agrees_with_matrix_exponentials_on_bounded_instances():
        rng = np.random.default_rng(2)
        for A, P in bounded_instances(10):
            series = conjugate_series(spectral_decompose(A), P)
            for t in rng.uniform(0, 100, 20):
                expected = conjugated(A, P, t)
                assert np.allclose(evaluate(series, t), expected, rtol=0, atol=1e-8)

    def agrees_with_matrix_exponentials_on_mixed_rates():
        rng = np.random.default_rng(4)
        W = np.eye(3) + 0.3 * rng.standard_normal((3, 3))
        A = W @ np.diag([0.1, -0.2, 0.3]) @ np.linalg.inv(W)
        P = random_fourier(rng, 3)
        series = conjugate_series(spectral_decompose(A), P)
        for t in rng.uniform(0, 10, 20):
            expected = conjugated(A, P, t)
            error = np.linalg.norm(evaluate(series, t) - expected)
            assert error <= 1e-8 * max(1.0, np.linalg.norm(expected))

    def is_linear_in_the_perturbation():
        rng = np.random.default_rng(9)
        A, P1 = bounded_instances(4)[3]
        P2 = random_fourier(rng, A.shape[0], 2)
        spectrum = spectral_decompose(A)
        total = make_fourier_matrix(1.0, [*P1.modes, *P2.modes])
        combined = conjugate_series(spectrum, total)
        summed = add_series(
            conjugate_series(spectrum, P1), conjugate_series(spectrum, P2), tol=1e-9
        )
        for t in rng.uniform(0, 50, 20):
            assert np.allclose(evaluate(combined, t), evaluate(summed, t), atol=1e-10)

import numpy as np
from pytest import mark, raises

from temporal_homogenization import InvalidParameter, ZeroState, mat_exp
from temporal_homogenization.control import (
    decay_phase,
    growth_phase,
    mathieu_closed_form,
    mathieu_effective,
    mathieu_matrices,
    mathieu_system,
)
from temporal_homogenization.homogenize import error_report
from temporal_homogenization.integrate import integrate_reference


def describe_mathieu_matrices():
    def builds_oscillator_with_second_harmonic_modulation():
        A, P = mathieu_matrices(2.0, 0.0)
        assert np.array_equal(A, [[0.0, 1.0], [-4.0, 0.0]])
        (mode,) = P.modes
        assert mode.l == 2
        assert P.omega == 2.0
        assert np.allclose(mode.cos, [[0.0, 0.0], [-4.0, 0.0]])
        assert np.allclose(mode.sin, np.zeros((2, 2)))

    def rejects_nonpositive_frequency():
        with raises(InvalidParameter):
            mathieu_matrices(0.0)

    def builds_forced_system():
        system = mathieu_system(1.0, 0.1, delta=0.5)
        assert np.array_equal(system.f.value, [0.0, 0.5])
        assert np.array_equal(system.x0, [1.0, 0.0])


def describe_mathieu_effective():
    def has_zero_trace_and_fixed_determinant():
        omega = 1.7
        B, _ = mathieu_effective(omega, 1.1)
        assert abs(np.trace(B)) < 1e-15
        assert np.isclose(np.linalg.det(B), -(omega**2) / 16)

    def evaluates_matrix_exponential():
        for omega, theta in ((0.5, 0.0), (1.0, 1.2), (3.0, 2.5)):
            B, evaluator = mathieu_effective(omega, theta)
            for epsilon, t in ((0.01, 50.0), (0.1, 3.0), (0.05, 100.0)):
                expected = mat_exp(epsilon * B, t)
                actual = evaluator(epsilon, t)
                assert np.allclose(actual, expected, rtol=1e-10, atol=1e-10)


def describe_phases():
    def matches_known_values():
        omega = 3.0
        assert decay_phase(1.0, omega, omega) == 0.0
        assert np.isclose(decay_phase(1.0, 0.0, omega), np.pi / 2)
        assert np.isclose(growth_phase(1.0, 0.0, omega), 3 * np.pi / 2)

    def put_state_on_eigenvectors_of_effective_matrix():
        omega = 2.0
        rng = np.random.default_rng(5)
        for x0, v0 in rng.standard_normal((10, 2)):
            state = np.array([x0, v0])
            B_decay, _ = mathieu_effective(omega, decay_phase(x0, v0, omega))
            B_growth, _ = mathieu_effective(omega, growth_phase(x0, v0, omega))
            assert np.allclose(B_decay @ state, -omega / 4 * state)
            assert np.allclose(B_growth @ state, omega / 4 * state)

    def reject_zero_state():
        with raises(ZeroState):
            decay_phase(0.0, 0.0, 1.0)
        with raises(ZeroState):
            growth_phase(0.0, 0.0, 1.0)


def describe_exponential_decay():
    def decays_at_quarter_rate_from_decay_phase():
        omega, epsilon = 1.0, 0.01
        theta = decay_phase(1.0, 0.0, omega)
        system = mathieu_system(omega, epsilon, theta)
        times = np.linspace(0, 1 / epsilon, 501)
        trajectory = integrate_reference(system, times[-1], 1e-11, times)
        amplitude = np.hypot(trajectory.states[:, 0], trajectory.states[:, 1] / omega)
        slope, _ = np.polyfit(times, np.log(amplitude), 1)
        expected = -epsilon * omega / 4
        assert abs(slope - expected) <= 0.3 * abs(expected)


@mark.slow
def describe_mathieu_closed_form():
    def stays_within_ten_epsilon_of_reference():
        omega, epsilon = 1.0, 1e-2
        times = np.linspace(0, 1 / epsilon, 201)
        for theta in (0.0, np.pi / 2):
            system = mathieu_system(omega, epsilon, theta)
            reference = integrate_reference(system, times[-1], 1e-11, times)
            closed = mathieu_closed_form(omega, theta, epsilon, 1.0, 0.0, times)
            report = error_report(closed, reference, system)
            assert report.normalized_max < 10 * epsilon

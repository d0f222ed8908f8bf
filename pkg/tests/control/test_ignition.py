import numpy as np
from pytest import raises

from temporal_homogenization import InvalidParameter
from temporal_homogenization.control import simulate_ignition


def describe_simulate_ignition():
    def stays_at_rest_without_forcing():
        trajectory = simulate_ignition(1.0, 0.1, 0.0, 50.0)
        assert np.array_equal(trajectory.states, np.zeros_like(trajectory.states))

    def stays_bounded_without_modulation():
        omega, delta = 2.0, 0.3
        trajectory = simulate_ignition(omega, 0.0, delta, 200.0)
        assert np.max(np.abs(trajectory.states[:, 0])) <= 2 * delta / omega**2 + 1e-8

    def grows_at_quarter_rate_once_kicked():
        omega, epsilon = 1.0, 0.01
        times = np.array([0.0, 1200.0, 2000.0])
        trajectory = simulate_ignition(omega, epsilon, 0.01, 2000.0, times=times)
        amplitude = np.hypot(trajectory.states[:, 0], trajectory.states[:, 1] / omega)
        rate = np.log(amplitude[2] / amplitude[1]) / (times[2] - times[1])
        expected = epsilon * omega / 4
        assert abs(rate - expected) <= 0.3 * expected

    def rejects_negative_modulation():
        with raises(InvalidParameter):
            simulate_ignition(1.0, -0.1, 1.0, 10.0)

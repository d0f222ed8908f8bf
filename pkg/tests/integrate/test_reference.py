import numpy as np
from pytest import raises

from temporal_homogenization import InvalidParameter
from temporal_homogenization.control import mathieu_system
from temporal_homogenization.homogenize import ConstantForcing, make_linear_system
from temporal_homogenization.integrate import integrate_reference
from temporal_homogenization.series import zero_fourier


def describe_integrate_reference():
    def integrates_constant_forcing():
        c = np.array([1.0, -2.0])
        system = make_linear_system(
            np.zeros((2, 2)), zero_fourier(2), 0.1, ConstantForcing(c), [0.5, 0.5]
        )
        trajectory = integrate_reference(system, 4.0)
        assert trajectory.method == "reference"
        assert trajectory.times.shape == (1001,)
        expected = system.x0 + trajectory.times[:, None] * c
        assert np.allclose(trajectory.states, expected, rtol=1e-10, atol=1e-12)

    def rotates_harmonic_oscillator():
        A = np.array([[0.0, 1.0], [-1.0, 0.0]])
        system = make_linear_system(A, zero_fourier(2), 0.1, x0=[1.0, 0.0])
        trajectory = integrate_reference(system, np.pi, 1e-12, [0.0, np.pi / 2, np.pi])
        assert np.allclose(trajectory.states[1], [0.0, -1.0], atol=1e-10)
        assert np.allclose(trajectory.states[2], [-1.0, 0.0], atol=1e-10)

    def converges_with_tolerance():
        system = mathieu_system(1.0, 0.1, theta=0.4, delta=0.2)
        times = np.linspace(0, 50, 11)
        tight = integrate_reference(system, 50.0, 1e-12, times)
        loose = integrate_reference(system, 50.0, 1e-9, times)
        assert np.max(np.abs(tight.states - loose.states)) < 1e-6
        assert tight.step_meta["nfev"] > loose.step_meta["nfev"]

    def rejects_tolerances_out_of_range():
        system = mathieu_system(1.0, 0.1)
        for rel_tol in (1e-14, 1e-2):
            with raises(InvalidParameter):
                integrate_reference(system, 1.0, rel_tol)

    def rejects_nonpositive_end_times():
        with raises(InvalidParameter):
            integrate_reference(mathieu_system(1.0, 0.1), 0.0)

    def rejects_grids_past_end_time():
        with raises(InvalidParameter):
            integrate_reference(mathieu_system(1.0, 0.1), 1.0, times=[0.0, 2.0])

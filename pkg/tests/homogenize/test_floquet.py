import numpy as np
from pytest import raises

from temporal_homogenization import NonzeroForcing, mat_exp
from temporal_homogenization.control import mathieu_system
from temporal_homogenization.homogenize import floquet_approx, make_linear_system
from temporal_homogenization.integrate import integrate_reference
from temporal_homogenization.series import zero_fourier


def describe_floquet_approx():
    def is_free_flow_without_perturbation():
        A = np.array([[0.0, 1.0], [-2.0, -0.1]])
        system = make_linear_system(A, zero_fourier(2, 0.7), 0.1, x0=[1.0, 0.0])
        times = np.linspace(0, 30, 31)
        approx = floquet_approx(system, times)
        assert approx.method == "floquet"
        assert approx.step_meta["period"] == system.P.period
        for t, state in zip(times, approx.states):
            assert np.allclose(state, mat_exp(A, t) @ system.x0, rtol=1e-9, atol=1e-12)

    def refuses_forced_systems():
        with raises(NonzeroForcing):
            floquet_approx(mathieu_system(1.0, 0.1, delta=1.0), [0.0, 1.0])

    def starts_from_initial_state():
        system = mathieu_system(1.0, 0.1, x0=0.2, v0=0.7)
        approx = floquet_approx(system, [0.0])
        assert np.allclose(approx.states[0], [0.2, 0.7], rtol=0, atol=1e-14)

    def is_second_order_accurate_within_one_period():
        errors = []
        for epsilon in (1e-2, 5e-3):
            system = mathieu_system(1.0, epsilon, theta=0.6)
            times = np.linspace(0, system.P.period, 41)
            reference = integrate_reference(system, times[-1], 1e-12, times)
            approx = floquet_approx(system, times)
            errors.append(np.max(np.abs(approx.states - reference.states)))
        assert 3.0 < errors[0] / errors[1] < 5.0

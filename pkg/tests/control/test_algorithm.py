import logging

import numpy as np
from pytest import mark, raises

from temporal_homogenization import InvalidParameter, NonpositiveTarget, ZeroState
from temporal_homogenization.control import (
    ControlConfig,
    PolynomialTarget,
    SampledTarget,
    control_config_from_json,
    evaluate_target,
    run_control,
    tracking_error,
    window_parameters,
    write_control_trace,
)
from temporal_homogenization.integrate import make_schedule, velocity_verlet

QUINTIC_TARGET = {"roots": [6, 5, 4, 3, -0.1], "offset": 10}


def describe_evaluate_target():
    def evaluates_polynomials_highest_degree_first():
        target = PolynomialTarget((2.0, 0.0, 1.0))
        assert evaluate_target(target, 3.0) == 19.0
        assert np.array_equal(evaluate_target(target, np.array([0.0, 1.0])), [1.0, 3.0])

    def interpolates_samples():
        target = SampledTarget(np.array([0.0, 2.0]), np.array([1.0, 3.0]))
        assert evaluate_target(target, 1.0) == 2.0


def describe_window_parameters():
    def grows_with_growth_phase():
        omega, H = 10.0, 0.2
        epsilon, theta = window_parameters(1.0, 0.0, omega, 2.0, H)
        assert np.isclose(epsilon, np.log(2.0) / (omega * H))
        assert np.isclose(theta, 3 * np.pi / 2)

    def decays_with_decay_phase():
        epsilon, theta = window_parameters(1.0, 0.0, 10.0, 0.5, 0.2, gain_exponent=4)
        assert np.isclose(epsilon, 4 * np.log(2.0) / 2.0)
        assert np.isclose(theta, np.pi / 2)

    def holds_still_at_unit_ratio():
        epsilon, _ = window_parameters(0.3, 1.0, 1.0, 1.0, 1.0)
        assert epsilon == 0.0

    def scales_amplitude_by_gain_over_one_window():
        omega, M = 10.0, 20.0
        H = M / omega
        for r in (0.9, 1.1):
            epsilon, theta = window_parameters(1.0, 0.0, omega, r, H, gain_exponent=4)
            schedule = make_schedule([0.0], [epsilon], [theta], H)
            piece = velocity_verlet(omega, schedule, 1.0, 0.0, 0.01 / omega, H)
            x, v = piece.states[-1]
            ratio = np.hypot(x, v / omega)
            assert abs(np.log(ratio) / np.log(r) - 1) < 0.1

    def balances_reciprocal_ratios_to_second_order():
        omega, H = 10.0, 2.0
        log_gains = []
        for r in (1.05, 1 / 1.05):
            epsilon, theta = window_parameters(1.0, 0.0, omega, r, H, gain_exponent=4)
            schedule = make_schedule([0.0], [epsilon], [theta], H)
            piece = velocity_verlet(omega, schedule, 1.0, 0.0, 0.005 / omega, H)
            x, v = piece.states[-1]
            log_gains.append(np.log(np.hypot(x, v / omega)))
        assert log_gains[0] > 0 > log_gains[1]
        assert abs(sum(log_gains)) < 10 * epsilon**2

    def refuses_nonpositive_ratio_and_zero_state():
        with raises(NonpositiveTarget):
            window_parameters(1.0, 0.0, 1.0, 0.0, 1.0)
        with raises(ZeroState):
            window_parameters(0.0, 0.0, 1.0, 2.0, 1.0)


def describe_run_control():
    def holds_constant_target():
        cfg = ControlConfig(omega=50.0, target=PolynomialTarget((1.0,)), t_end=2.0)
        trace = run_control(cfg)
        assert tracking_error(trace) < 5e-3
        assert trace.trajectory.times[-1] == 2.0
        assert len(trace.windows) == 50
        assert trace.window_index[-1] == 49

    def follows_slowly_rising_target():
        cfg = ControlConfig(
            omega=100.0, target=PolynomialTarget((0.5, 1.0)), t_end=3.0, x0=1.0
        )
        trace = run_control(cfg)
        assert tracking_error(trace, 0.5) < 0.05
        assert trace.trajectory.step_meta["H"] == cfg.H

    def refuses_targets_touching_zero():
        cfg = ControlConfig(omega=10.0, target=PolynomialTarget((-1.0, 1.0)), t_end=2.0)
        with raises(NonpositiveTarget):
            run_control(cfg)

    def refuses_zero_state_and_invalid_parameters():
        target = PolynomialTarget((1.0,))
        with raises(ZeroState):
            run_control(ControlConfig(omega=10.0, target=target, t_end=1.0, x0=0.0))
        with raises(InvalidParameter):
            run_control(ControlConfig(omega=0.0, target=target, t_end=1.0))
        with raises(InvalidParameter):
            run_control(ControlConfig(omega=10.0, target=target, t_end=-1.0))

    def warns_about_fast_targets(caplog):
        cfg = ControlConfig(omega=1.0, target=PolynomialTarget((5.0, 1.0)), t_end=1.0)
        with caplog.at_level(logging.WARNING):
            run_control(cfg)
        assert "varies fast" in caplog.text

    def writes_trace(tmp_path):
        cfg = ControlConfig(omega=20.0, target=PolynomialTarget((1.0,)), t_end=0.5)
        trace = run_control(cfg)
        path = tmp_path / "control.csv"
        write_control_trace(path, trace)
        lines = path.read_text().splitlines()
        assert lines[0] == "t,x,v,amplitude,target,window,epsilon,theta"
        assert len(lines) == trace.trajectory.times.size + 1
        assert lines[1].split(",")[5] == "0"


def describe_tracking_error():
    def needs_samples_in_range():
        cfg = ControlConfig(omega=20.0, target=PolynomialTarget((1.0,)), t_end=0.5)
        with raises(InvalidParameter):
            tracking_error(run_control(cfg), 1.0, 2.0)


def describe_control_config_from_json():
    def builds_polynomial_from_roots():
        cfg = control_config_from_json(
            {"omega": 200, "t_end": 7, "target": QUINTIC_TARGET}
        )
        assert np.isclose(evaluate_target(cfg.target, 0.0), 46.0)
        assert np.isclose(evaluate_target(cfg.target, 5.0), 10.0)
        assert cfg.x0 == 1.0 and cfg.v0 == 0.0
        assert cfg.dt is None

    def reads_coefficients_and_samples():
        cfg = control_config_from_json(
            {"omega": 1, "t_end": 1, "target": {"polynomial": [1, 2]}, "dt": 0.01}
        )
        assert cfg.target == PolynomialTarget((1.0, 2.0))
        assert cfg.dt == 0.01
        cfg = control_config_from_json(
            {"omega": 1, "t_end": 1, "target": {"times": [0, 1], "values": [1, 2]}}
        )
        assert isinstance(cfg.target, SampledTarget)

    def rejects_unknown_targets():
        with raises(InvalidParameter):
            control_config_from_json({"omega": 1, "t_end": 1, "target": {"spline": []}})
        with raises(InvalidParameter):
            control_config_from_json(
                {"omega": 1, "t_end": 1, "target": {"times": [1, 0], "values": [1, 2]}}
            )


@mark.slow
def describe_target_tracking():
    def tracks_better_at_higher_frequency():
        errors = {}
        for omega in (200.0, 1000.0):
            cfg = control_config_from_json(
                {
                    "omega": omega,
                    "t_end": 7.0,
                    "dt": 0.1 / omega,
                    "target": QUINTIC_TARGET,
                }
            )
            errors[omega] = tracking_error(run_control(cfg), 1.0, 7.0)
        assert errors[1000.0] < errors[200.0]
        assert errors[1000.0] < 0.1

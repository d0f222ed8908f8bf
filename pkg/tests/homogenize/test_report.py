import numpy as np
from pytest import raises

from temporal_homogenization import GridMismatch, mat_exp
from temporal_homogenization.control import mathieu_system
from temporal_homogenization.homogenize import Trajectory, error_report

times = np.linspace(0, 2, 3)


def trajectory(states, grid=times):
    return Trajectory(grid, np.asarray(states, dtype=float), "test")


def describe_error_report():
    def vanishes_for_identical_trajectories():
        reference = trajectory([[1.0, 0.0], [0.0, 2.0], [3.0, 4.0]])
        metrics = error_report(reference, reference)
        assert metrics.max_plain == metrics.rms_plain == 0.0
        assert metrics.max_scaled == 0.0
        assert metrics.scale == 5.0
        assert metrics.normalized_max == 0.0

    def measures_plain_errors():
        reference = trajectory(np.ones((3, 2)))
        approx = trajectory(np.zeros((3, 2)))
        metrics = error_report(approx, reference)
        assert np.isclose(metrics.max_plain, np.sqrt(2))
        assert np.isclose(metrics.rms_plain, np.sqrt(2))
        assert np.isclose(metrics.normalized_max, 1.0)

    def scales_errors_back_by_the_free_flow():
        system = mathieu_system(2.0, 0.1)
        reference = trajectory([[1.0, 0.0], [0.5, 1.0], [0.0, -3.0]])
        approx = trajectory(np.zeros((3, 2)))
        metrics = error_report(approx, reference, system)
        expected = max(
            np.linalg.norm(mat_exp(system.A, -t) @ state)
            for t, state in zip(times, reference.states)
        )
        assert np.isclose(metrics.max_scaled, expected)
        assert metrics.scale == 0.0
        assert metrics.normalized_max == float("inf")

    def refuses_different_grids():
        reference = trajectory(np.ones((3, 2)))
        with raises(GridMismatch):
            error_report(trajectory(np.ones((2, 2)), times[:2]), reference)
        with raises(GridMismatch):
            error_report(trajectory(np.ones((3, 2)), times + 0.1), reference)

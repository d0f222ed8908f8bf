from math import ceil, cos
from typing import Any, NamedTuple

import numpy as np

from ..error import InvalidParameter, ScheduleGap
from ..homogenize.system import Trajectory

__all__ = ["constant_schedule", "make_schedule", "velocity_verlet", "EpsilonSchedule"]


class EpsilonSchedule(NamedTuple):
    """Piecewise constant modulation depth and phase.

    Window i covers [starts[i], starts[i + 1]) and the last window ends at
    end. Within window i the stiffness is
    omega^2 (1 + epsilons[i] cos(2 omega (t - starts[i]) + thetas[i])).
    """

    starts: np.ndarray
    epsilons: np.ndarray
    thetas: np.ndarray
    end: float = float("inf")


def make_schedule(
    starts: Any, epsilons: Any, thetas: Any, end: float = float("inf")
) -> EpsilonSchedule:
    starts = np.asarray(starts, dtype=float)
    epsilons = np.asarray(epsilons, dtype=float)
    thetas = np.asarray(thetas, dtype=float)
    if not starts.size or not starts.shape == epsilons.shape == thetas.shape:
        raise InvalidParameter(
            f"Schedule arrays must be nonempty and equally long, got {starts.shape},"
            f" {epsilons.shape} and {thetas.shape}."
        )
    if np.any(np.diff(starts) <= 0) or not end > starts[-1]:
        raise InvalidParameter("Schedule windows must have increasing starts.")
    return EpsilonSchedule(starts, epsilons, thetas, float(end))


def constant_schedule(epsilon: float, theta: float) -> EpsilonSchedule:
    """A single window from t = 0 without end."""
    return make_schedule([0.0], [epsilon], [theta])


def velocity_verlet(
    omega: float,
    schedule: EpsilonSchedule,
    x0: float,
    v0: float,
    dt: float,
    t_end: float,
    t_start: float = 0.0,
    stride: int = 1,
) -> Trajectory:
    """Integrate x'' + omega^2 (1 + eps cos(2 omega t + theta)) x = 0.

    Each step freezes the stiffness at the step midpoint t + dt/2, taken
    from the window containing that midpoint, and applies a half kick, a
    drift and a half kick. The last step is shortened to end at t_end.
    Every stride-th state is recorded, and always the final one.
    """
    if not omega > 0:
        raise InvalidParameter(f"The frequency must be positive, got {omega}.")
    if not dt > 0:
        raise InvalidParameter(f"The step must be positive, got {dt}.")
    if stride < 1:
        raise InvalidParameter(f"The stride must be at least 1, got {stride}.")
    if not t_end > t_start:
        raise InvalidParameter(f"The end time {t_end} must follow the start {t_start}.")
    if schedule.starts[0] > t_start or schedule.end < t_end:
        raise ScheduleGap(
            f"The schedule covers [{schedule.starts[0]}, {schedule.end}],"
            f" not [{t_start}, {t_end}]."
        )

    steps = int(ceil((t_end - t_start) / dt * (1 - 1e-12)))
    omega2 = omega * omega
    window = int(np.searchsorted(schedule.starts, t_start, side="right")) - 1
    starts = schedule.starts.tolist()
    epsilons = schedule.epsilons.tolist()
    thetas = schedule.thetas.tolist()
    x, v = float(x0), float(v0)
    t = t_start
    times = [t]
    states = [(x, v)]
    for step in range(steps):
        h = min(dt, t_end - t)
        middle = t + h / 2
        while window + 1 < len(starts) and starts[window + 1] <= middle:
            window += 1
        phase = 2 * omega * (middle - starts[window]) + thetas[window]
        stiffness = omega2 * (1 + epsilons[window] * cos(phase))
        v -= 0.5 * h * stiffness * x
        x += h * v
        v -= 0.5 * h * stiffness * x
        t = t_end if step == steps - 1 else t + h
        if (step + 1) % stride == 0 or step == steps - 1:
            times.append(t)
            states.append((x, v))
    meta = {"dt": dt, "stride": stride}
    return Trajectory(np.array(times), np.array(states), "velocity-verlet", meta)

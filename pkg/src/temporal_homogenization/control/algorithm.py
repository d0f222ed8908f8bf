import logging
from math import atan2, hypot, log
from pathlib import Path
from typing import Any, Dict, List, NamedTuple, Optional, Tuple, Union

import numpy as np

from ..error import InvalidParameter, NonpositiveTarget, ZeroState
from ..homogenize.system import Trajectory
from ..integrate.verlet import make_schedule, velocity_verlet
from ..settings import DEFAULTS
from ..utils.serialization import write_csv

__all__ = [
    "control_config_from_json",
    "control_trace_rows",
    "evaluate_target",
    "run_control",
    "tracking_error",
    "window_parameters",
    "write_control_trace",
    "ControlConfig",
    "ControlTrace",
    "PolynomialTarget",
    "SampledTarget",
    "Target",
    "WindowRecord",
]

logger = logging.getLogger(__name__)

TARGET_SAMPLES = 2001
CONTROL_HEADER = ["t", "x", "v", "amplitude", "target", "window", "epsilon", "theta"]


class PolynomialTarget(NamedTuple):
    """Polynomial coefficients, highest degree first."""

    coefficients: Tuple[float, ...]


class SampledTarget(NamedTuple):
    """Target samples on an increasing grid, linearly interpolated."""

    times: np.ndarray
    values: np.ndarray


Target = Union[PolynomialTarget, SampledTarget]


def evaluate_target(target: Target, t: Any) -> Any:
    """Evaluate the target amplitude at a time or an array of times."""
    if isinstance(target, PolynomialTarget):
        value = np.zeros_like(np.asarray(t, dtype=float))
        for coefficient in target.coefficients:
            value = value * t + coefficient
        return value
    return np.interp(t, target.times, target.values)


class ControlConfig(NamedTuple):
    """Inputs of the amplitude control.

    Windows have width H = M / omega and the integrator step defaults to
    step_fraction / omega. gain_exponent g scales the modulation depth of
    every window to g log(r) / (omega H); the homogenized amplitude then
    changes by r^(g/4) per window.
    """

    omega: float
    target: Target
    t_end: float
    x0: float = 1.0
    v0: float = 0.0
    M: float = DEFAULTS.window_constant
    dt: Optional[float] = None
    gain_exponent: float = 1.0

    @property
    def H(self) -> float:
        return self.M / self.omega


class WindowRecord(NamedTuple):
    index: int
    start: float
    r: float
    epsilon: float
    theta: float


class ControlTrace(NamedTuple):
    """Control windows with the integrated state and the tracked amplitude."""

    windows: Tuple[WindowRecord, ...]
    trajectory: Trajectory
    amplitude: np.ndarray
    target: np.ndarray
    window_index: np.ndarray


def window_parameters(
    x: float, v: float, omega: float, r: float, H: float, gain_exponent: float = 1.0
) -> Tuple[float, float]:
    """Modulation depth and phase that scale the amplitude of (x, v) towards r times.

    With a = x and b = v / omega, growth uses theta = 2 atan2(a + b, b - a) and
    decay uses theta = 2 atan2(a - b, a + b), which put the state on the
    growing or decaying mode of the effective matrix.
    """
    if not r > 0:
        raise NonpositiveTarget(f"The amplitude ratio must be positive, got {r}.")
    a, b = x, v / omega
    if a == 0 and b == 0:
        raise ZeroState("The control cannot act on the zero state.")
    if r >= 1:
        return gain_exponent * log(r) / (omega * H), 2 * atan2(a + b, b - a)
    return -gain_exponent * log(r) / (omega * H), 2 * atan2(a - b, a + b)


def _check_target(cfg: ControlConfig, ratio: float) -> None:
    times = np.linspace(0.0, cfg.t_end + cfg.H, TARGET_SAMPLES)
    values = np.asarray(evaluate_target(cfg.target, times), dtype=float)
    if not np.all(values > 0) or not np.all(np.isfinite(values)):
        worst = float(np.nanmin(values))
        raise NonpositiveTarget(
            f"The target must stay positive on [0, {cfg.t_end + cfg.H:.6g}],"
            f" got {worst:.6g}."
        )
    slope = np.gradient(values, times)
    log_rate = float(np.max(np.abs(slope / values))) / cfg.omega
    rate = float(np.max(np.abs(slope))) / cfg.omega
    if log_rate > ratio or rate > ratio:
        logger.warning(
            "The target varies fast compared to the carrier:"
            " |d log f/dt| / omega = %.3g, |df/dt| / omega = %.3g.",
            log_rate,
            rate,
        )


def run_control(
    cfg: ControlConfig,
    step_fraction: float = DEFAULTS.step_fraction,
    slow_target_ratio: float = DEFAULTS.slow_target_ratio,
) -> ControlTrace:
    """Steer the oscillator amplitude along the target by parametric modulation.

    At the start t of each window the ratio r = f(t + H) / amplitude
    selects the modulation depth and phase of window_parameters, which
    stay fixed while velocity_verlet integrates the window. The last window
    is cut at t_end.
    """
    if not cfg.omega > 0:
        raise InvalidParameter(f"The frequency must be positive, got {cfg.omega}.")
    if not cfg.t_end > 0 or not cfg.M > 0:
        raise InvalidParameter(
            "The horizon and window constant must be positive,"
            f" got {cfg.t_end} and {cfg.M}."
        )
    if cfg.x0 == 0 and cfg.v0 == 0:
        raise ZeroState("The control cannot start from the zero state.")
    _check_target(cfg, slow_target_ratio)
    dt = cfg.dt if cfg.dt is not None else step_fraction / cfg.omega
    H = cfg.H

    windows: List[WindowRecord] = []
    times: List[np.ndarray] = [np.array([0.0])]
    states: List[np.ndarray] = [np.array([[cfg.x0, cfg.v0]])]
    indices: List[np.ndarray] = [np.array([0])]
    x, v = cfg.x0, cfg.v0
    count = int(np.ceil(cfg.t_end / H * (1 - 1e-12)))
    for index in range(count):
        start = index * H
        stop = min(start + H, cfg.t_end)
        r = float(evaluate_target(cfg.target, start + H)) / hypot(x, v / cfg.omega)
        epsilon, theta = window_parameters(x, v, cfg.omega, r, H, cfg.gain_exponent)
        windows.append(WindowRecord(index, start, r, epsilon, theta))
        schedule = make_schedule([start], [epsilon], [theta], stop)
        piece = velocity_verlet(cfg.omega, schedule, x, v, dt, stop, t_start=start)
        times.append(piece.times[1:])
        states.append(piece.states[1:])
        indices.append(np.full(piece.times.size - 1, index))
        x, v = piece.states[-1]

    all_times = np.concatenate(times)
    all_states = np.concatenate(states)
    amplitude = np.hypot(all_states[:, 0], all_states[:, 1] / cfg.omega)
    meta = {"dt": dt, "H": H, "gain_exponent": cfg.gain_exponent}
    trajectory = Trajectory(all_times, all_states, "control", meta)
    logger.debug("Control ran %d windows of width %.3g.", len(windows), H)
    return ControlTrace(
        tuple(windows),
        trajectory,
        amplitude,
        np.asarray(evaluate_target(cfg.target, all_times), dtype=float),
        np.concatenate(indices),
    )


def tracking_error(
    trace: ControlTrace, t_start: float = 0.0, t_end: float = float("inf")
) -> float:
    """RMS of the relative amplitude error over samples in [t_start, t_end]."""
    times = trace.trajectory.times
    selected = (times >= t_start) & (times <= t_end)
    if not np.any(selected):
        raise InvalidParameter(f"No samples in [{t_start}, {t_end}].")
    target = trace.target[selected]
    relative = (trace.amplitude[selected] - target) / target
    return float(np.sqrt(np.mean(relative**2)))


def control_trace_rows(trace: ControlTrace) -> List[List[Any]]:
    epsilons = np.array([w.epsilon for w in trace.windows])
    thetas = np.array([w.theta for w in trace.windows])
    return [
        [t, x, v, amplitude, target, int(window), epsilons[window], thetas[window]]
        for t, (x, v), amplitude, target, window in zip(
            trace.trajectory.times,
            trace.trajectory.states,
            trace.amplitude,
            trace.target,
            trace.window_index,
        )
    ]


def write_control_trace(path: Union[str, Path], trace: ControlTrace) -> None:
    """Write the trace as CSV.

    The header is t,x,v,amplitude,target,window,epsilon,theta.
    """
    write_csv(path, CONTROL_HEADER, control_trace_rows(trace))


def control_config_from_json(data: Dict[str, Any]) -> ControlConfig:
    """Read a control configuration.

    The target is {"polynomial": [coefficients, highest degree first]},
    {"roots": [...], "scale": s, "offset": c} for s prod(t - root) + c, or
    {"times": [...], "values": [...]}.
    """
    spec = data["target"]
    if "polynomial" in spec:
        target: Target = PolynomialTarget(tuple(float(c) for c in spec["polynomial"]))
    elif "roots" in spec:
        coefficients = float(spec.get("scale", 1.0)) * np.poly(spec["roots"])
        coefficients[-1] += float(spec.get("offset", 0.0))
        target = PolynomialTarget(tuple(coefficients.tolist()))
    elif "times" in spec:
        times = np.asarray(spec["times"], dtype=float)
        values = np.asarray(spec["values"], dtype=float)
        if times.shape != values.shape or np.any(np.diff(times) <= 0):
            raise InvalidParameter("Sampled targets need matching, increasing grids.")
        target = SampledTarget(times, values)
    else:
        raise InvalidParameter(f"Unknown target specification {sorted(spec)}.")
    return ControlConfig(
        omega=float(data["omega"]),
        target=target,
        t_end=float(data["t_end"]),
        x0=float(data.get("x0", 1.0)),
        v0=float(data.get("v0", 0.0)),
        M=float(data.get("M", DEFAULTS.window_constant)),
        dt=float(data["dt"]) if data.get("dt") is not None else None,
        gain_exponent=float(data.get("gain_exponent", 1.0)),
    )

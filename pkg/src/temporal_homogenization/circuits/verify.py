import logging
from typing import Any, NamedTuple, Optional

import numpy as np

from ..error import DimensionError, InvalidParameter
from ..homogenize.system import LinearSystem, Trajectory
from ..integrate.reference import integrate_reference
from ..settings import DEFAULTS
from .bank import CircuitBank, build_bank, drive_frequency, super_resonance_threshold

__all__ = ["fit_growth_rate", "verify_growth", "GrowthCheck"]

logger = logging.getLogger(__name__)

MIN_PERIODS = 8


class GrowthCheck(NamedTuple):
    """Fitted growth rate of a simulated bank next to the homogenized prediction."""

    fitted_rate: float
    predicted_rate: float
    grows: bool
    consistent: bool
    t_end: float


def fit_growth_rate(trajectory: Trajectory, start_fraction: float = 0.5) -> float:
    """Least squares slope of log |x(t)| after start_fraction of the run."""
    if not 0 <= start_fraction < 1:
        raise InvalidParameter(
            f"The start fraction must lie in [0, 1), got {start_fraction}."
        )
    times = trajectory.times
    start = times[0] + start_fraction * (times[-1] - times[0])
    selected = times >= start
    norms = np.linalg.norm(trajectory.states[selected], axis=1)
    if selected.sum() < 2 or not np.all(norms > 0):
        raise InvalidParameter("Fitting a growth rate needs two nonzero states.")
    slope, _ = np.polyfit(times[selected], np.log(norms), 1)
    return float(slope)


def _check_growth(
    system: LinearSystem,
    bank: CircuitBank,
    horizon_factor: float,
    rel_tol: float,
    x0: Optional[Any],
) -> GrowthCheck:
    omega = drive_frequency(bank)
    grows, margin = super_resonance_threshold(bank, omega)
    scale = bank.epsilon * bank.n / (4 * omega) + bank.gamma / 2
    if not scale > 0:
        raise InvalidParameter(
            "A bank without dissipation or modulation has no time scale."
        )
    if x0 is not None:
        x0 = np.asarray(x0, dtype=float)
        if x0.shape != (system.dim,):
            raise DimensionError(
                f"The initial state has shape {x0.shape}, expected ({system.dim},)."
            )
        system = system._replace(x0=x0)
    t_end = horizon_factor / scale
    # sampled at whole drive periods, where the common mode has turned full circle
    period = 2 * np.pi / omega
    times = period * np.arange(max(MIN_PERIODS, int(t_end // period)) + 1)
    trajectory = integrate_reference(system, times[-1], rel_tol, times)
    fitted = fit_growth_rate(trajectory)
    consistent = (fitted > 0) == grows
    if not consistent:
        logger.warning(
            "Fitted growth rate %.3g contradicts the threshold verdict grows=%s.",
            fitted,
            grows,
        )
    return GrowthCheck(fitted, margin, grows, consistent, float(times[-1]))


def verify_growth(
    bank: CircuitBank,
    horizon_factor: float = DEFAULTS.horizon_factor,
    x0: Optional[Any] = None,
    rel_tol: float = 1e-9,
) -> GrowthCheck:
    """Simulate the bank and fit its exponential growth rate.

    The run lasts horizon_factor / (eps n / (4 omega) + gamma / 2) and is
    sampled once per drive period. The default initial state sets every
    current to 1, which lies in the common mode and so has a component along
    its growing direction.
    """
    return _check_growth(build_bank(bank), bank, horizon_factor, rel_tol, x0)

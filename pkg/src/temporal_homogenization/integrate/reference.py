import logging
from typing import Any, Optional

import numpy as np
from scipy.integrate import solve_ivp

from ..error import InvalidParameter, StepUnderflow
from ..homogenize.cell import check_grid
from ..homogenize.system import LinearSystem, Trajectory, evaluate_forcing
from ..series.fourier import fourier_evaluate
from ..settings import DEFAULTS

__all__ = ["integrate_reference"]

logger = logging.getLogger(__name__)

MIN_REL_TOL = 1e-13
MAX_REL_TOL = 1e-3
DEFAULT_POINTS = 1001


def integrate_reference(
    system: LinearSystem,
    t_end: float,
    rel_tol: float = DEFAULTS.rel_tol,
    times: Optional[Any] = None,
) -> Trajectory:
    """Integrate x' = A x + eps P(t) x + f(t) from x0 with adaptive steps.

    Uses the embedded Dormand-Prince pair of order 8(5,3) with its dense
    output evaluated on the given grid, by default 1001 equally spaced
    points on [0, t_end]. The absolute tolerance is 1e-2 rel_tol times the
    size of the initial state, at least 1e-2 rel_tol.
    """
    if not t_end > 0:
        raise InvalidParameter(f"The end time must be positive, got {t_end}.")
    if not MIN_REL_TOL <= rel_tol <= MAX_REL_TOL:
        raise InvalidParameter(
            f"The relative tolerance must lie in [{MIN_REL_TOL}, {MAX_REL_TOL}],"
            f" got {rel_tol}."
        )
    if times is None:
        times = np.linspace(0.0, t_end, DEFAULT_POINTS)
    times = check_grid(times)
    if times[-1] > t_end * (1 + 1e-12):
        raise InvalidParameter(
            f"The output grid ends at {times[-1]}, after the end time {t_end}."
        )
    times = np.minimum(times, t_end)
    atol = 1e-2 * rel_tol * max(1.0, float(np.max(np.abs(system.x0), initial=0.0)))

    def rhs(t: float, x: np.ndarray) -> np.ndarray:
        return (
            system.A @ x
            + system.epsilon * (fourier_evaluate(system.P, t) @ x)
            + evaluate_forcing(system.f, t)
        )

    solution = solve_ivp(
        rhs,
        (0.0, t_end),
        system.x0,
        method="DOP853",
        t_eval=times,
        rtol=rel_tol,
        atol=atol,
    )
    if solution.status != 0:
        reached = solution.t[-1] if solution.t.size else 0.0
        raise StepUnderflow(
            f"The reference integration failed at t={reached}:"
            f" {solution.message}"
        )
    states = solution.y.T
    if not np.all(np.isfinite(states)):
        raise StepUnderflow("The reference integration produced non-finite states.")
    logger.debug(
        "Reference integration to %.6g used %d evaluations.", t_end, solution.nfev
    )
    meta = {"rel_tol": rel_tol, "atol": atol, "nfev": int(solution.nfev)}
    return Trajectory(times, states, "reference", meta)

from typing import NamedTuple, Optional, Tuple

import numpy as np

from ..algebra.matrix import mat_exp
from ..error import GridMismatch
from .forcing import forcing_integral
from .system import LinearSystem, Trajectory

__all__ = ["error_report", "ErrorMetrics"]


class ErrorMetrics(NamedTuple):
    """Errors of an approximation against a reference trajectory.

    The scaled error is exp(-At) times the plain error, i.e. the error of
    the slow variables. The scale is max |Omega| + max |forcing integral| of
    the approximation and normalized_max is max_scaled divided by it.
    """

    max_scaled: float
    rms_scaled: float
    max_plain: float
    rms_plain: float
    scale: float
    normalized_max: float


def _max_rms(errors: np.ndarray) -> Tuple[float, float]:
    norms = np.linalg.norm(errors, axis=1)
    return float(np.max(norms)), float(np.sqrt(np.mean(norms**2)))


def error_report(
    approx: Trajectory,
    reference: Trajectory,
    system: Optional[LinearSystem] = None,
) -> ErrorMetrics:
    """Compare two trajectories on the same grid.

    Without a system the scaled frame coincides with the plain one and the
    scale is the largest reference state.
    """
    shapes = (approx.states.shape, reference.states.shape)
    if approx.times.shape != reference.times.shape or shapes[0] != shapes[1]:
        raise GridMismatch(f"Trajectories have shapes {shapes[0]} and {shapes[1]}.")
    span = max(1.0, float(np.max(np.abs(reference.times))))
    if not np.allclose(approx.times, reference.times, rtol=0, atol=1e-12 * span):
        raise GridMismatch("Trajectories are sampled on different time grids.")

    plain = reference.states - approx.states
    if system is None:
        scaled = plain
        scale = float(np.max(np.linalg.norm(reference.states, axis=1)))
    else:
        flows = [mat_exp(-system.A, t) for t in approx.times]
        integrals = np.array(
            [forcing_integral(system.A, system.f, t) for t in approx.times]
        )
        scaled = np.array([flow @ error for flow, error in zip(flows, plain)])
        slow = np.array([flow @ x for flow, x in zip(flows, approx.states)]) - integrals
        scale = float(
            np.max(np.linalg.norm(slow, axis=1))
            + np.max(np.linalg.norm(integrals, axis=1))
        )
    max_scaled, rms_scaled = _max_rms(scaled)
    max_plain, rms_plain = _max_rms(plain)
    if scale:
        normalized = max_scaled / scale
    else:
        normalized = 0.0 if not max_scaled else float("inf")
    return ErrorMetrics(max_scaled, rms_scaled, max_plain, rms_plain, scale, normalized)

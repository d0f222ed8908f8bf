from typing import Any, Callable, Tuple

import numpy as np

from ..algebra.matrix import Mat
from ..error import InvalidParameter, ZeroState
from ..homogenize.cell import check_grid
from ..homogenize.system import (
    ConstantForcing,
    LinearSystem,
    Trajectory,
    ZeroForcing,
    make_linear_system,
)
from ..series.fourier import FourierMatrix, make_fourier_matrix

__all__ = [
    "decay_phase",
    "growth_phase",
    "mathieu_closed_form",
    "mathieu_effective",
    "mathieu_matrices",
    "mathieu_system",
]


def _check_omega(omega: float) -> None:
    if not omega > 0 or not np.isfinite(omega):
        raise InvalidParameter(f"The frequency must be positive, got {omega}.")


def mathieu_matrices(omega: float, theta: float = 0.0) -> Tuple[Mat, FourierMatrix]:
    """A and P of x'' + omega^2 (1 + eps cos(2 omega t + theta)) x = 0.

    The state is (x, x') and P has the single Fourier mode l = 2.
    """
    _check_omega(omega)
    omega2 = omega * omega
    A = np.array([[0.0, 1.0], [-omega2, 0.0]])
    cos = np.array([[0.0, 0.0], [-omega2 * np.cos(theta), 0.0]])
    sin = np.array([[0.0, 0.0], [omega2 * np.sin(theta), 0.0]])
    return A, make_fourier_matrix(omega, [(2, cos, sin)])


def mathieu_system(
    omega: float,
    epsilon: float,
    theta: float = 0.0,
    x0: float = 1.0,
    v0: float = 0.0,
    delta: float = 0.0,
) -> LinearSystem:
    """The Mathieu equation as a linear system, optionally forced by (0, delta)."""
    A, P = mathieu_matrices(omega, theta)
    f = ConstantForcing(np.array([0.0, delta])) if delta else ZeroForcing(2)
    return make_linear_system(A, P, epsilon, f, [x0, v0])


def mathieu_effective(
    omega: float, theta: float = 0.0
) -> Tuple[Mat, Callable[[float, float], Mat]]:
    """Effective matrix of the Mathieu equation and exp(eps B t) in closed form.

    B = -1/4 [[omega sin(theta), cos(theta)], [omega^2 cos(theta), -omega sin(theta)]]
    has zero trace and determinant -omega^2 / 16, so B^2 = omega^2 / 16 and
    exp(eps B t) = cosh(s) + 4 sinh(s) B / omega with s = eps omega t / 4.
    """
    _check_omega(omega)
    s, c = np.sin(theta), np.cos(theta)
    B = -0.25 * np.array([[omega * s, c], [omega * omega * c, -omega * s]])

    def evaluator(epsilon: float, t: float) -> Mat:
        phase = epsilon * omega * t / 4
        return np.cosh(phase) * np.eye(2) + (4 / omega) * np.sinh(phase) * B

    return B, evaluator


def mathieu_closed_form(
    omega: float,
    theta: float,
    epsilon: float,
    x0: float,
    v0: float,
    times: Any,
) -> Trajectory:
    """Homogenized Mathieu solution exp(At) exp(eps B t) (x0, v0)."""
    times = check_grid(times)
    _, evaluator = mathieu_effective(omega, theta)
    start = np.array([x0, v0], dtype=float)
    states = []
    for t in times:
        c, s = np.cos(omega * t), np.sin(omega * t)
        flow = np.array([[c, s / omega], [-omega * s, c]])
        states.append(flow @ evaluator(epsilon, t) @ start)
    return Trajectory(times, np.array(states), "mathieu-closed-form", {})


def decay_phase(x0: float, v0: float, omega: float) -> float:
    """Modulation phase for an amplitude decaying as exp(-eps omega t / 4)."""
    _check_omega(omega)
    if x0 == 0 and v0 == 0:
        raise ZeroState("The zero state has no decay phase.")
    return float(2 * np.arctan2(x0 - v0 / omega, x0 + v0 / omega))


def growth_phase(x0: float, v0: float, omega: float) -> float:
    """Modulation phase for an amplitude growing as exp(eps omega t / 4)."""
    _check_omega(omega)
    if x0 == 0 and v0 == 0:
        raise ZeroState("The zero state has no growth phase.")
    a, b = x0, v0 / omega
    return float(2 * np.arctan2(a + b, b - a))

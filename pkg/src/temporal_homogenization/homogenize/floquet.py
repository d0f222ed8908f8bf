import logging
from typing import Any, Callable, Dict

import numpy as np
from scipy.integrate import quad_vec

from ..algebra.matrix import mat_exp
from ..algebra.spectrum import spectral_decompose
from ..error import DefectiveMatrix, NonzeroForcing
from ..series.conjugation import conjugate_series
from ..series.fourier import fourier_evaluate
from ..series.trig_series import integrate_series
from ..settings import DEFAULTS
from .cell import check_grid
from .system import ConstantForcing, LinearSystem, Trajectory, ZeroForcing

__all__ = ["floquet_approx"]

logger = logging.getLogger(__name__)


def _conjugated_integral(
    system: LinearSystem, quadrature_tolerance: float
) -> Callable[[float], np.ndarray]:
    """Return s -> integral of exp(-At) P(t) exp(At) over [0, s]."""
    try:
        series = conjugate_series(spectral_decompose(system.A), system.P)
    except DefectiveMatrix:
        logger.info(
            "Defective system matrix; integrating the conjugation by quadrature."
        )

        def by_quadrature(s: float) -> np.ndarray:
            result, _ = quad_vec(
                lambda tau: mat_exp(-system.A, tau)
                @ fourier_evaluate(system.P, tau)
                @ mat_exp(system.A, tau),
                0.0,
                s,
                epsabs=quadrature_tolerance,
                epsrel=quadrature_tolerance,
            )
            return np.asarray(result)

        return by_quadrature
    return lambda s: integrate_series(series, s)


def floquet_approx(
    system: LinearSystem,
    times: Any,
    quadrature_tolerance: float = DEFAULTS.quadrature_tolerance,
) -> Trajectory:
    """First order perturbative Floquet approximation of a homogeneous system.

    Within one period the fundamental matrix is exp(As) + eps Phi1(s) with
    Phi1(s) = exp(As) times the integral of the conjugated perturbation.
    Later times use the monodromy matrix: at t = mT + s the approximation is
    (exp(As) + eps Phi1(s)) (exp(AT) + eps Phi1(T))^m x0.
    """
    homogeneous = isinstance(system.f, ZeroForcing) or (
        isinstance(system.f, ConstantForcing) and not np.any(system.f.value)
    )
    if not homogeneous:
        raise NonzeroForcing("The perturbative Floquet baseline needs f = 0.")
    times = check_grid(times)
    integral = _conjugated_integral(system, quadrature_tolerance)
    T = system.P.period

    def one_period(s: float) -> np.ndarray:
        flow = mat_exp(system.A, s)
        return flow + system.epsilon * flow @ integral(s)

    monodromy = one_period(T)
    powers: Dict[int, np.ndarray] = {}
    states = []
    for t in times:
        m = int(np.floor(t / T))
        s = t - m * T
        if m not in powers:
            powers[m] = np.linalg.matrix_power(monodromy, m)
        states.append(one_period(s) @ powers[m] @ system.x0)
    return Trajectory(times, np.array(states), "floquet", {"period": T})

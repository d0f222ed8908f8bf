import logging
from typing import Any, List

import numpy as np
from scipy.integrate import quad_vec

from ..algebra.matrix import mat_exp
from ..error import DimensionError, UnboundedConjugation, UnsupportedForcing
from ..growth.effective import EffectiveModel
from ..series.fourier import FourierMode, fourier_evaluate, make_fourier_matrix
from ..series.trig_series import evaluate
from ..settings import DEFAULTS
from .forcing import forcing_integral
from .system import (
    ConstantForcing,
    LinearSystem,
    SampledForcing,
    Trajectory,
    TrigForcing,
    ZeroForcing,
    validity_horizon,
)

__all__ = [
    "augment_forcing",
    "cell_rhs",
    "check_grid",
    "effective_solution",
    "solve_cell",
]

logger = logging.getLogger(__name__)


def check_grid(times: Any) -> np.ndarray:
    """Convert times to a nonnegative, nondecreasing one-dimensional grid."""
    times = np.atleast_1d(np.asarray(times, dtype=float))
    if times.ndim != 1 or not times.size:
        raise DimensionError(f"Expected a nonempty time grid, got shape {times.shape}.")
    if times[0] < 0 or np.any(np.diff(times) < 0) or not np.all(np.isfinite(times)):
        raise DimensionError("Time grids must be finite, nonnegative and increasing.")
    return times


def _require_bounded(model: EffectiveModel) -> None:
    if not model.bounded:
        raise UnboundedConjugation(
            "The cell problem needs a bounded conjugated perturbation,"
            f" growing terms {list(model.verdict.offending_terms)}."
        )


def cell_rhs(model: EffectiveModel, system: LinearSystem, t: float) -> np.ndarray:
    """Forcing term F(t) of the cell problem.

    F(t) = exp(-At) P(t) exp(At) times the forcing integral up to t. The
    conjugated perturbation is B plus the remainder series when the model
    carries one, otherwise it is formed from matrix exponentials.
    """
    _require_bounded(model)
    if isinstance(system.f, ZeroForcing) or t == 0:
        return np.zeros(system.dim)
    integral = forcing_integral(system.A, system.f, t)
    if model.remainder is not None:
        conjugated = model.B + evaluate(model.remainder, t)
    else:
        conjugated = (
            mat_exp(-system.A, t) @ fourier_evaluate(system.P, t) @ mat_exp(system.A, t)
        )
    return conjugated @ integral


def solve_cell(
    model: EffectiveModel,
    system: LinearSystem,
    omega0: Any,
    times: Any,
    quadrature_tolerance: float = DEFAULTS.quadrature_tolerance,
) -> Trajectory:
    """Solve the cell problem Omega' = eps B Omega + eps F(t) on a time grid.

    Without forcing the solution is exp(eps B t) Omega0. Otherwise it is
    exp(eps B t) (Omega0 + G(t)) with G(t) the integral of
    exp(-eps B s) eps F(s), accumulated interval by interval over the grid.
    """
    _require_bounded(model)
    times = check_grid(times)
    omega0 = np.asarray(omega0, dtype=float)
    if omega0.shape != (system.dim,):
        raise DimensionError(
            f"The cell problem starts from shape {omega0.shape},"
            f" expected ({system.dim},)."
        )
    epsB = system.epsilon * model.B
    meta = {"quadrature_tolerance": quadrature_tolerance}
    if isinstance(system.f, ZeroForcing):
        states = np.array([mat_exp(epsB, t) @ omega0 for t in times])
        return Trajectory(times, states, "cell", meta)

    def integrand(s: float) -> np.ndarray:
        return mat_exp(-epsB, s) @ (system.epsilon * cell_rhs(model, system, s))

    accumulated = np.zeros(system.dim)
    previous = 0.0
    states_list: List[np.ndarray] = []
    for t in times:
        if t > previous:
            piece, _ = quad_vec(
                integrand,
                previous,
                t,
                epsabs=quadrature_tolerance,
                epsrel=quadrature_tolerance,
            )
            accumulated = accumulated + piece
            previous = t
        states_list.append(mat_exp(epsB, t) @ (omega0 + accumulated))
    return Trajectory(times, np.array(states_list), "cell", meta)


def effective_solution(
    system: LinearSystem,
    model: EffectiveModel,
    times: Any,
    horizon_constant: float = DEFAULTS.horizon_constant,
) -> Trajectory:
    """The homogenized approximation exp(At) (Omega(t) + forcing integral).

    Omega solves the cell problem from the initial state of the system, so
    the approximation matches x0 exactly at t = 0.
    """
    times = check_grid(times)
    horizon = validity_horizon(system, horizon_constant)
    if times[-1] > horizon:
        logger.warning(
            "Times up to %.6g exceed the validity horizon %.6g"
            " of the effective solution.",
            times[-1],
            horizon,
        )
    cell = solve_cell(model, system, system.x0, times)
    states = np.array(
        [
            mat_exp(system.A, t) @ (omega + forcing_integral(system.A, system.f, t))
            for t, omega in zip(times, cell.states)
        ]
    )
    meta = {**cell.step_meta, "method": model.method}
    return Trajectory(times, states, "effective", meta)


def augment_forcing(system: LinearSystem) -> LinearSystem:
    """Absorb periodic forcing into the matrices with a constant dummy state.

    The augmented state is (x, z) with z' = 0 and z(0) = 1. Constant parts
    of f go into the last column of A and oscillating parts, divided by
    epsilon, into the last column of P. The forcing frequencies must be
    multiples of the base frequency of P.
    """
    n = system.dim
    f = system.f
    if isinstance(f, SampledForcing):
        raise UnsupportedForcing(
            "Sampled forcing cannot be absorbed into the matrices."
        )
    A = np.zeros((n + 1, n + 1))
    A[:n, :n] = system.A
    cos_columns = {mode.l: mode.cos for mode in system.P.modes}
    sin_columns = {mode.l: mode.sin for mode in system.P.modes}
    modes = {
        l: [_pad(cos_columns[l]), _pad(sin_columns[l])]  # noqa: E741
        for l in cos_columns  # noqa: E741
    }
    if isinstance(f, ConstantForcing):
        A[:n, n] = f.value
    elif isinstance(f, TrigForcing):
        for term in f.terms:
            l = term.b / system.P.omega  # noqa: E741
            if term.a != 0 or term.k != 0 or abs(l - round(l)) > 1e-9 * max(1.0, l):
                raise UnsupportedForcing(
                    f"Forcing term (a={term.a}, b={term.b}, k={term.k}) is not periodic"
                    f" with base frequency {system.P.omega}."
                )
            if round(l) == 0:
                A[:n, n] += term.ccos
                continue
            entry = modes.setdefault(
                int(round(l)), [np.zeros((n + 1, n + 1)), np.zeros((n + 1, n + 1))]
            )
            entry[0][:n, n] += term.ccos / system.epsilon
            entry[1][:n, n] += term.dsin / system.epsilon
    P = make_fourier_matrix(
        system.P.omega,
        (FourierMode(l, cos, sin) for l, (cos, sin) in modes.items()),  # noqa: E741
        n + 1,
    )
    x0 = np.append(system.x0, 1.0)
    return LinearSystem(A, P, system.epsilon, ZeroForcing(n + 1), x0)


def _pad(matrix: np.ndarray) -> np.ndarray:
    padded = np.zeros((matrix.shape[0] + 1, matrix.shape[1] + 1))
    padded[:-1, :-1] = matrix
    return padded

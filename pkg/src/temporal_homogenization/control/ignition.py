from typing import Any, Optional

import numpy as np

from ..error import InvalidParameter
from ..homogenize.system import (
    ConstantForcing,
    Trajectory,
    ZeroForcing,
    make_linear_system,
)
from ..integrate.reference import integrate_reference
from ..series.fourier import zero_fourier
from ..settings import DEFAULTS
from .mathieu import mathieu_matrices

__all__ = ["simulate_ignition"]


def simulate_ignition(
    omega: float,
    epsilon: float,
    delta: float,
    t_end: float,
    rel_tol: float = DEFAULTS.rel_tol,
    times: Optional[Any] = None,
) -> Trajectory:
    """Start parametric growth from rest with the constant forcing (0, delta).

    The zero state of the Mathieu equation stays at rest under any
    modulation; the additive forcing kicks it onto the growing mode. Without
    modulation (epsilon = 0) the forced oscillation stays bounded.
    """
    if epsilon < 0:
        raise InvalidParameter(
            f"The modulation depth must be nonnegative, got {epsilon}."
        )
    A, P = mathieu_matrices(omega)
    f = ConstantForcing(np.array([0.0, delta])) if delta else ZeroForcing(2)
    if epsilon:
        system = make_linear_system(A, P, epsilon, f)
    else:
        system = make_linear_system(
            A, zero_fourier(2, omega), 1.0, f, epsilon_warning=float("inf")
        )
    return integrate_reference(system, t_end, rel_tol, times)

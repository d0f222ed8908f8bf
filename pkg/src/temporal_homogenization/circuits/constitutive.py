from typing import Any, Optional, Tuple

import numpy as np

from ..algebra.matrix import Mat
from ..error import SingularCouplingData
from ..homogenize.system import LinearSystem, make_linear_system
from ..series.fourier import FourierMode, make_fourier_matrix, zero_fourier
from ..settings import DEFAULTS
from .bank import CircuitBank, drive_frequency
from .verify import GrowthCheck, _check_growth

__all__ = [
    "build_bank_constitutive",
    "constitutive_transform",
    "verify_growth_constitutive",
]

SCALE = 1.0


def _state_matrix(bank: CircuitBank) -> Mat:
    """A for x = (V_1, V_2,1, I_1, ..., V_2,n, I_n)."""
    n = bank.n
    A = np.zeros((2 * n + 1, 2 * n + 1))
    for i in range(n):
        voltage, current = 2 * i + 1, 2 * i + 2
        A[0, current] = 1 / bank.Cbar
        A[voltage, current] = 1 / bank.C
        A[current, 0] = -1 / bank.L
        A[current, voltage] = -1 / bank.L
        A[current, current] = -bank.R / bank.L
    return A


def constitutive_transform(A: Mat, n: int, scale: float = SCALE) -> Tuple[Mat, Mat]:
    """U and U^-1 that split A into a 3x3 common block and n - 1 circuit blocks.

    Built from b = A[0, 1:3], d = A[1:3, 0] and E = A[1:3, 1:3] with the
    free nonzero scale lambda. Circuit 1 carries -I in every other mode
    column and circuit k >= 2 carries I in mode column k.
    """
    b2 = A[0, 2]
    d2 = A[2, 0]
    E = A[1:3, 1:3]
    zeta = n * b2 * d2 + E[0, 1] * E[1, 0]
    if not zeta or not d2 or not E[0, 1]:
        raise SingularCouplingData(
            f"The coupling data is singular: zeta={zeta:.6g}, d2={d2:.6g},"
            f" E12={E[0, 1]:.6g}."
        )
    size = 2 * n + 1
    eye = np.eye(2)
    gamma = np.array([scale, 0.0])

    U = np.zeros((size, size))
    U[0, 0] = -E[1, 0] / d2 * scale
    U[0, 1:3] = [b2 / E[0, 1] * n, 0.0]
    for i in range(n):
        rows = slice(2 * i + 1, 2 * i + 3)
        U[rows, 0] = gamma
        U[rows, 1:3] = eye
        for k in range(1, n):
            columns = slice(2 * k + 1, 2 * k + 3)
            if i == 0:
                U[rows, columns] = -eye
            elif i == k:
                U[rows, columns] = eye

    U_inv = np.zeros((size, size))
    x = -d2 * E[0, 1] / (zeta * scale)
    y = np.array([b2 * d2 / (zeta * scale), 0.0])
    z = np.diag([E[0, 1] * E[1, 0] / (zeta * n), 1 / n])
    U_inv[0, 0] = x
    U_inv[1:3, 0] = [d2 * E[0, 1] / zeta, 0.0]
    for i in range(n):
        columns = slice(2 * i + 1, 2 * i + 3)
        U_inv[0, columns] = y
        U_inv[1:3, columns] = z
        for k in range(1, n):
            rows = slice(2 * k + 1, 2 * k + 3)
            U_inv[rows, columns] = (eye if i == k else 0) - eye / n
    return U, U_inv


def build_bank_constitutive(bank: CircuitBank) -> Tuple[LinearSystem, Mat, Mat]:
    """The bank with the shared capacitor law d(C(t) V_1)/dt = sum of currents.

    Keeping first order in eta gives eps = eta, a sine mode -2 omega on V_1
    and a cosine mode 1/Cbar from every current into V_1. The initial state
    is the first mode column of U.
    """
    n = bank.n
    omega = drive_frequency(bank)
    A = _state_matrix(bank)
    U, U_inv = constitutive_transform(A, n)
    x0 = U[:, 1]
    if not bank.eta:
        system = make_linear_system(
            A,
            zero_fourier(2 * n + 1, omega),
            1.0,
            None,
            x0,
            epsilon_warning=float("inf"),
        )
        return system, U, U_inv
    cos = np.zeros_like(A)
    sin = np.zeros_like(A)
    sin[0, 0] = -2 * omega
    cos[0, 2::2] = 1 / bank.Cbar
    P = make_fourier_matrix(omega, [FourierMode(2, cos, sin)])
    return make_linear_system(A, P, bank.eta, None, x0), U, U_inv


def verify_growth_constitutive(
    bank: CircuitBank,
    horizon_factor: float = DEFAULTS.horizon_factor,
    x0: Optional[Any] = None,
    rel_tol: float = 1e-9,
) -> GrowthCheck:
    """verify_growth for the constitutive capacitor model.

    The predicted rate and the verdict are those of the charge form, which
    share the resonant frequency; the two models agree for unit C.
    """
    system, _, _ = build_bank_constitutive(bank)
    return _check_growth(system, bank, horizon_factor, rel_tol, x0)

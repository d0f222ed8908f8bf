import logging
from typing import Any, Dict, NamedTuple, Optional, Sequence, Tuple

import numpy as np

from ..algebra.matrix import Mat
from ..error import (
    DimensionError,
    InvalidParameter,
    NotAtResonance,
    NumericalFailure,
    OverdampedBank,
)
from ..homogenize.system import LinearSystem, make_linear_system
from ..series.fourier import FourierMode, make_fourier_matrix, zero_fourier
from ..settings import DEFAULTS

__all__ = [
    "bank_from_json",
    "bank_to_json",
    "build_bank",
    "coupling_transform",
    "drive_frequency",
    "effective_delta",
    "make_bank",
    "minimum_circuits",
    "permute_circuits",
    "resonant_frequency",
    "super_resonance_threshold",
    "CircuitBank",
]

logger = logging.getLogger(__name__)


class CircuitBank(NamedTuple):
    """Identical RLC circuits coupled through one shared modulated capacitor.

    The shared capacitance is Cbar (1 - eta cos(2 omega t)). Without an
    explicit omega the bank is driven at its resonant frequency.
    """

    n: int
    L: float
    C: float
    Cbar: float
    R: float
    eta: float
    omega: Optional[float] = None

    @property
    def gamma(self) -> float:
        return self.R / self.L

    @property
    def epsilon(self) -> float:
        return self.eta / (self.L * self.Cbar)


def make_bank(
    n: int,
    L: float,
    C: float,
    Cbar: float,
    R: float,
    eta: float,
    omega: Optional[float] = None,
    eta_warning: float = DEFAULTS.eta_warning,
) -> CircuitBank:
    if int(n) != n or n < 1:
        raise InvalidParameter(
            f"The number of circuits must be a positive integer, got {n}."
        )
    for name, value in (("L", L), ("C", C), ("Cbar", Cbar)):
        if not value > 0 or not np.isfinite(value):
            raise InvalidParameter(f"{name} must be positive, got {value}.")
    if not R >= 0 or not eta >= 0:
        raise InvalidParameter(f"R and eta must be nonnegative, got {R} and {eta}.")
    if omega is not None and not omega > 0:
        raise InvalidParameter(f"The drive frequency must be positive, got {omega}.")
    if eta >= eta_warning:
        logger.warning("Modulation amplitude eta=%.3g is not small.", eta)
    return CircuitBank(
        int(n),
        float(L),
        float(C),
        float(Cbar),
        float(R),
        float(eta),
        None if omega is None else float(omega),
    )


def resonant_frequency(bank: CircuitBank) -> float:
    """sqrt(1/(LC) + n/(L Cbar) - R^2/(4 L^2)), the frequency of the common mode."""
    radicand = (
        1 / (bank.L * bank.C) + bank.n / (bank.L * bank.Cbar) - bank.gamma**2 / 4
    )
    if radicand <= 0:
        raise OverdampedBank(
            "The common mode is overdamped:"
            f" 1/(LC) + n/(L Cbar) - R^2/(4L^2) = {radicand:.6g}."
        )
    return float(np.sqrt(radicand))


def drive_frequency(bank: CircuitBank) -> float:
    """The explicit drive frequency of the bank, else its resonant frequency."""
    return bank.omega if bank.omega is not None else resonant_frequency(bank)


def build_bank(bank: CircuitBank) -> LinearSystem:
    """The bank as x' = A x + eps P(t) x for x = (I_1, I_1', ..., I_n, I_n').

    Terms of second order in eta are dropped. A bank without modulation
    gets a zero perturbation.
    """
    n = bank.n
    omega = drive_frequency(bank)
    coupling = 1 / (bank.L * bank.Cbar)
    block = np.array([[0.0, 1.0], [-1 / (bank.L * bank.C) - coupling, -bank.gamma]])
    D = np.array([[0.0, 0.0], [-coupling, 0.0]])
    A = np.kron(np.eye(n), block - D) + np.kron(np.ones((n, n)), D)
    x0 = np.kron(np.ones(n), [1.0, 0.0])
    if not bank.eta:
        return make_linear_system(
            A, zero_fourier(2 * n, omega), 1.0, None, x0, epsilon_warning=float("inf")
        )
    Q = np.array([[0.0, 0.0], [1.0, 0.0]])
    P = make_fourier_matrix(
        omega, [FourierMode(2, np.kron(np.ones((n, n)), Q), np.zeros((2 * n, 2 * n)))]
    )
    return make_linear_system(A, P, bank.epsilon, None, x0)


def coupling_transform(n: int) -> Tuple[Mat, Mat]:
    """U and its inverse that split the bank into the common mode and n - 1 others.

    The first block column of U is the common mode; block column j >= 2
    is I everywhere except -(n - 1) I in block row j.
    """
    if int(n) != n or n < 1:
        raise InvalidParameter(
            f"The number of circuits must be a positive integer, got {n}."
        )
    pattern = np.ones((n, n)) - n * np.eye(n)
    pattern[:, 0] = 1.0
    inverse = np.zeros((n, n))
    inverse[0] = 1.0
    for j in range(1, n):
        inverse[j, 0] = 1.0
        inverse[j, j] = -1.0
    inverse /= n
    return np.kron(pattern, np.eye(2)), np.kron(inverse, np.eye(2))


def effective_delta(bank: CircuitBank, omega: Optional[float] = None) -> Mat:
    """The 2x2 effective matrix of the common mode, per unit n.

    Only defined at resonance; a supplied frequency more than 1e-9 relative
    away from the resonant one raises NotAtResonance.
    """
    resonant = resonant_frequency(bank)
    if omega is None:
        omega = bank.omega if bank.omega is not None else resonant
    if abs(omega - resonant) > DEFAULTS.resonance_match * resonant:
        raise NotAtResonance(
            f"Frequency {omega:.12g} is not the resonant frequency {resonant:.12g}."
        )
    gamma = bank.gamma
    w2 = omega * omega
    delta = np.array(
        [
            [gamma / (8 * w2), 1 / (4 * w2)],
            [-(gamma**2 - 4 * w2) / (16 * w2), -gamma / (8 * w2)],
        ]
    )
    eigenvalues = np.sort(np.linalg.eigvals(delta).real)
    expected = np.array([-1.0, 1.0]) / (4 * omega)
    if not np.allclose(eigenvalues, expected, rtol=0, atol=1e-10 * max(1.0, 1 / omega)):
        raise NumericalFailure(
            f"Eigenvalues {eigenvalues} of the effective matrix"
            " differ from +-1/(4 omega)."
        )
    return delta


def super_resonance_threshold(
    bank: CircuitBank, omega: Optional[float] = None
) -> Tuple[bool, float]:
    """Whether the bank grows, eps n / omega > 2 gamma, and the growth exponent.

    The margin eps n / (4 omega) - gamma / 2 is the homogenized growth rate
    of the common mode.
    """
    if omega is None:
        omega = drive_frequency(bank)
    drive = bank.epsilon * bank.n
    grows = drive / omega > 2 * bank.gamma
    return grows, drive / (4 * omega) - bank.gamma / 2


def minimum_circuits(
    L: float, C: float, Cbar: float, R: float, eta: float, max_n: int = 10**9
) -> Optional[int]:
    """Smallest number of circuits whose bank grows at its own resonance.

    The left side of the threshold grows like sqrt(n), so the first growing
    bank is found by doubling and bisection. Returns None beyond max_n.
    """

    def grows(n: int) -> bool:
        bank = make_bank(n, L, C, Cbar, R, eta, eta_warning=float("inf"))
        return super_resonance_threshold(bank)[0]

    if not eta > 0 or not grows(max_n):
        return None
    high = 1
    while not grows(high):
        high = min(2 * high, max_n)
    low = high // 2
    while high - low > 1:
        middle = (low + high) // 2
        if grows(middle):
            high = middle
        else:
            low = middle
    return high


def permute_circuits(system: LinearSystem, permutation: Sequence[int]) -> LinearSystem:
    """Relabel the circuits of a bank.

    New circuit i is old circuit permutation[i].
    """
    count = len(permutation)
    if sorted(permutation) != list(range(count)) or system.dim % count:
        raise DimensionError(
            f"{list(permutation)} is not a permutation of the {count} circuits."
        )
    Pi = np.kron(np.eye(count)[list(permutation)], np.eye(system.dim // count))
    modes = [
        FourierMode(mode.l, Pi @ mode.cos @ Pi.T, Pi @ mode.sin @ Pi.T)
        for mode in system.P.modes
    ]
    return system._replace(
        A=Pi @ system.A @ Pi.T,
        P=make_fourier_matrix(system.P.omega, modes, system.dim),
        x0=Pi @ system.x0,
    )


def bank_to_json(bank: CircuitBank) -> Dict[str, Any]:
    return {key: value for key, value in bank._asdict().items() if value is not None}


def bank_from_json(data: Dict[str, Any]) -> CircuitBank:
    """Read {"n", "L", "C", "Cbar", "R", "eta"} and an optional "omega"."""
    unknown = sorted(set(data) - set(CircuitBank._fields))
    if unknown:
        raise InvalidParameter(f"Unknown bank parameters: {', '.join(unknown)}.")
    missing = sorted(set(CircuitBank._fields[:-1]) - set(data))
    if missing:
        raise InvalidParameter(f"Missing bank parameters: {', '.join(missing)}.")
    return make_bank(**data)

import logging
from math import ceil
from typing import Any, Iterator, NamedTuple, Optional, Tuple

import numpy as np
from scipy.linalg import eigvals, expm

from ..algebra.matrix import Mat, as_matrix
from ..algebra.spectrum import Spectrum
from ..error import (
    DimensionError,
    DivergenceDetected,
    InvalidParameter,
    UnboundedConjugation,
)
from ..series.conjugation import conjugate_series
from ..series.fourier import FourierMatrix, fourier_scale
from ..series.trig_series import TrigSeries
from ..settings import DEFAULTS
from .growth_operator import (
    BoundednessVerdict,
    growth_operator,
    is_growing,
    is_growth_term,
)

__all__ = [
    "effective_growth_rate",
    "effective_matrix_algebraic",
    "effective_matrix_averaged",
    "EffectiveModel",
]

logger = logging.getLogger(__name__)

ALGEBRAIC = "algebraic"
AVERAGED = "averaged"

EIGENBASIS_CONDITION = 1e8
EIGENBASIS_CHUNK = 1024


class EffectiveModel(NamedTuple):
    """The effective matrix B of a periodically perturbed system.

    For the algebraic method the remainder holds the purely oscillating and
    decaying part R(t) = exp(-At) P(t) exp(At) - B and the residual is the
    relative reconstruction error of the spectral decomposition. For the
    averaged method there is no remainder and the residual is the distance
    between the averages over [0, T] and [0, T/2].

    When the verdict is unbounded, the entries of B touched by growing terms
    are infinite.
    """

    B: Mat
    verdict: BoundednessVerdict
    remainder: Optional[TrigSeries]
    method: str
    residual: float

    @property
    def bounded(self) -> bool:
        return self.verdict.bounded


def effective_matrix_algebraic(
    spec: Spectrum,
    P: FourierMatrix,
    require_bounded: bool = False,
    frequency_tolerance: Optional[float] = None,
    prune_tolerance: float = DEFAULTS.prune_tolerance,
    near_resonance: float = DEFAULTS.near_resonance,
) -> EffectiveModel:
    """Compute B as the constant part of the growth component.

    The perturbation is expanded with conjugate_series and split by the
    growth operator. Terms of the remainder that oscillate slower than
    near_resonance times the base frequency are reported as near resonances,
    since they are excluded from B only by the frequency tolerance.

    If require_bounded is set, an unbounded verdict raises
    UnboundedConjugation instead of returning infinite entries.
    """
    series = conjugate_series(spec, P, frequency_tolerance, prune_tolerance)
    growth, verdict = growth_operator(series)
    n = series.dim
    B = np.zeros((n, n))
    for term in growth.terms:
        if term.key == (0.0, 0.0, 0):
            B = term.ccos.copy()
    if not verdict.bounded:
        cutoff = prune_tolerance * fourier_scale(P)
        for term in growth.terms:
            if is_growing(term):
                B[np.abs(term.ccos) + np.abs(term.dsin) > cutoff] = np.inf
        keys = ", ".join(
            f"(a={a:.6g}, b={b:.6g}, k={k})" for a, b, k in verdict.offending_terms
        )
        if require_bounded:
            raise UnboundedConjugation(f"The conjugated perturbation grows: {keys}.")
        logger.info("Unbounded conjugation with growing terms %s.", keys)
    remainder = TrigSeries(
        tuple(term for term in series.terms if not is_growth_term(term)), n
    )
    for term in remainder.terms:
        if term.a == 0 and term.k == 0 and term.b <= near_resonance * P.omega:
            logger.warning(
                "Near-resonant term left out of B: detuning %.3g (%.3g of omega).",
                term.b,
                term.b / P.omega,
            )
    return EffectiveModel(B, verdict, remainder, ALGEBRAIC, spec.residual)


def _chunk_length(A: np.ndarray, h: float, nodes: int) -> int:
    """Number of nodes per chunk such that exp(A m h) stays moderate."""
    norm = float(np.linalg.norm(A))
    limit = int(50 / (norm * h)) if norm else nodes
    return max(1, min(1024, nodes, limit))


def _eigenbasis(
    A: np.ndarray,
) -> Optional[Tuple[np.ndarray, np.ndarray, np.ndarray, float]]:
    """Eigenvalues, eigenvectors, their inverse and condition number of A.

    Returns None when A is defective or too close to it.
    """
    nu, S = np.linalg.eig(A)
    condition = float(np.linalg.cond(S))
    if not np.isfinite(condition) or condition > EIGENBASIS_CONDITION:
        return None
    return nu, S, np.linalg.inv(S), condition


def _eigenbasis_chunks(
    A: np.ndarray,
    coefficients: np.ndarray,
    h: float,
    n_quad: int,
    prune_tolerance: float,
) -> Optional[Iterator[Tuple[np.ndarray, np.ndarray]]]:
    """Conjugated coefficients in chunks of nodes, computed in the eigenbasis.

    Entry (i, j) of a coefficient in the eigenbasis evolves by the scalar
    exp((nu_j - nu_i) t). Couplings at roundoff level are set to zero so
    that they never pick up the rate of a growing pair.
    """
    decomposition = _eigenbasis(A)
    if decomposition is None:
        return None
    nu, S, S_inv, condition = decomposition
    hat = S_inv @ coefficients @ S
    size = float(np.max(np.abs(hat), initial=0.0))
    eps = np.finfo(float).eps
    cutoff = max(prune_tolerance, 64 * eps * condition) * size
    hat[np.abs(hat) <= cutoff] = 0.0
    coupled = np.any(hat != 0, axis=0)
    rates = np.where(coupled, nu[None, :] - nu[:, None], 0.0)

    def chunks() -> Iterator[Tuple[np.ndarray, np.ndarray]]:
        for start in range(0, n_quad + 1, EIGENBASIS_CHUNK):
            index = np.arange(start, min(start + EIGENBASIS_CHUNK, n_quad + 1))
            with np.errstate(over="ignore", invalid="ignore"):
                growth = np.exp(index[:, None, None] * h * rates)
                conjugated = S @ (hat[None] * growth[:, None]) @ S_inv
            yield index, conjugated.real

    return chunks()


def _propagated_chunks(
    A: np.ndarray, coefficients: np.ndarray, h: float, n_quad: int
) -> Iterator[Tuple[np.ndarray, np.ndarray]]:
    """Conjugated coefficients in chunks, carried along by one-step exponentials."""
    n = A.shape[0]
    m = _chunk_length(A, h, n_quad + 1)
    step, step_inv = expm(A * h), expm(-A * h)
    powers = [np.eye(n)]
    powers_inv = [np.eye(n)]
    for _ in range(m):
        powers.append(powers[-1] @ step)
        powers_inv.append(step_inv @ powers_inv[-1])
    power = np.array(powers)
    power_inv = np.array(powers_inv)
    carried = coefficients
    start = 0
    while start <= n_quad:
        count = min(m, n_quad + 1 - start)
        index = start + np.arange(count)
        yield index, power_inv[:count, None] @ carried[None] @ power[:count, None]
        carried = power_inv[count] @ carried @ power[count]
        start += count


def effective_matrix_averaged(
    A: Any,
    P: FourierMatrix,
    T: Optional[float] = None,
    n_quad: Optional[int] = None,
    divergence_guard: float = DEFAULTS.divergence_guard,
    averaging_periods: float = DEFAULTS.averaging_periods,
    nodes_per_period: int = DEFAULTS.nodes_per_period,
    prune_tolerance: float = DEFAULTS.prune_tolerance,
) -> EffectiveModel:
    """Approximate B by the time average of exp(-At) P(t) exp(At) over [0, T].

    The shortest period of the integrand is 2 pi / (l_max omega + 2 mu_max),
    with mu_max the largest imaginary part of an eigenvalue of A. By default
    T spans averaging_periods shortest periods and the composite trapezoidal
    rule uses nodes_per_period nodes per shortest period.

    A well conditioned eigenbasis conjugates each Fourier coefficient
    entrywise. Otherwise the coefficients are carried along by the one-step
    exponentials, so no exponential of the full time is ever formed. Raises
    DivergenceDetected when the running average exceeds divergence_guard
    times the size of P.
    """
    A = as_matrix(A, "system matrix")
    n = A.shape[0]
    if P.dim != n:
        raise DimensionError(
            f"The perturbation has dimension {P.dim}, the system matrix {n}."
        )
    scale = fourier_scale(P)
    if not scale:
        zero = np.zeros((n, n))
        return EffectiveModel(zero, BoundednessVerdict(True), None, AVERAGED, 0.0)

    mu_max = float(np.max(np.abs(eigvals(A).imag)))
    l_max = max(mode.l for mode in P.modes)
    fastest = l_max * P.omega + 2 * mu_max
    shortest = 2 * np.pi / fastest if fastest > 0 else P.period
    if T is None:
        T = averaging_periods * shortest
    if not T > 0:
        raise InvalidParameter(f"The averaging time must be positive, got {T}.")
    if n_quad is None:
        n_quad = int(ceil(nodes_per_period * T / shortest))
    n_quad = max(2, n_quad + n_quad % 2)
    h = T / n_quad
    half = n_quad // 2

    frequencies = []
    coefficients = []
    for mode in P.modes:
        frequencies.append((mode.l * P.omega, False))
        coefficients.append(mode.cos)
        if mode.l:
            frequencies.append((mode.l * P.omega, True))
            coefficients.append(mode.sin)
    stacked = np.array(coefficients)

    chunks = _eigenbasis_chunks(A, stacked, h, n_quad, prune_tolerance)
    if chunks is None:
        logger.debug("No well conditioned eigenbasis; propagating the conjugation.")
        chunks = _propagated_chunks(A, stacked, h, n_quad)

    total = np.zeros((n, n))
    total_half = np.zeros((n, n))
    for index, conjugated in chunks:
        taus = index * h
        weights = np.array(
            [
                np.sin(w * taus) if is_sin else np.cos(w * taus)
                for w, is_sin in frequencies
            ]
        ).T
        with np.errstate(invalid="ignore"):
            values = np.einsum("kl,klij->kij", weights, conjugated)

        trapezoid = np.full(index.size, h)
        trapezoid[index == 0] = h / 2
        trapezoid[index == n_quad] = h / 2
        with np.errstate(invalid="ignore"):
            total += np.einsum("k,kij->ij", trapezoid, values)
            in_half = index <= half
            trapezoid_half = np.where(index == half, h / 2, trapezoid)[in_half]
            total_half += np.einsum("k,kij->ij", trapezoid_half, values[in_half])

        elapsed = max(taus[-1], h)
        running = np.linalg.norm(total) / elapsed
        if not np.isfinite(running) or running > divergence_guard * scale:
            raise DivergenceDetected(
                f"The running average reached {running:.3g} at t={taus[-1]:.6g},"
                f" beyond {divergence_guard:.3g} times the perturbation size."
            )

    B = total / T
    B_half = total_half / (half * h)
    residual = float(np.linalg.norm(B - B_half))
    logger.debug(
        "Averaged over T=%.6g with %d nodes, residual %.3g.", T, n_quad, residual
    )
    return EffectiveModel(B, BoundednessVerdict(True), None, AVERAGED, residual)


def effective_growth_rate(model: EffectiveModel, epsilon: float) -> float:
    """Largest real part among the eigenvalues of epsilon B."""
    if not np.all(np.isfinite(model.B)):
        return float("inf")
    return float(np.max(eigvals(epsilon * model.B).real))

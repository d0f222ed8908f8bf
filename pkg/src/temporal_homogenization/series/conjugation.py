import logging
from typing import List, Optional

import numpy as np

from ..algebra.spectrum import Spectrum
from ..error import DimensionError
from ..settings import DEFAULTS
from .fourier import FourierMatrix, fourier_scale
from .trig_series import TrigSeries, TrigTerm, canonicalize, cluster_representatives

__all__ = ["conjugate_series"]

logger = logging.getLogger(__name__)


def conjugate_series(
    spec: Spectrum,
    P: FourierMatrix,
    frequency_tolerance: Optional[float] = None,
    prune_tolerance: float = DEFAULTS.prune_tolerance,
) -> TrigSeries:
    """Expand exp(-At) P(t) exp(At) into trigonometric-exponential terms.

    In the complex eigenbasis A = S diag(nu) S^-1 the entry (i, j) of a
    Fourier mode e^(i s l w t) picks up the exponent nu_j - nu_i + i s l w.
    Entries are grouped by their rate and absolute frequency, and each group
    is mapped back to the original basis, where the conjugate frequencies
    combine into real cosine and sine coefficients.

    Rates and frequencies are merged when closer than frequency_tolerance
    times the base frequency (default 1e-9). Terms with coefficients below
    prune_tolerance times the size of P are dropped.
    """
    n = spec.dim
    if P.dim != n:
        raise DimensionError(
            f"The perturbation has dimension {P.dim}, the system matrix {n}."
        )
    if frequency_tolerance is None:
        frequency_tolerance = DEFAULTS.frequency_tolerance
    tol = frequency_tolerance * P.omega
    scale = fourier_scale(P)
    if not scale:
        return TrigSeries((), n)
    prune = prune_tolerance * scale

    S, S_inv, nu = spec.complex_modes()
    entry_cutoff = prune / (np.linalg.norm(S) * np.linalg.norm(S_inv))
    differences = nu[None, :] - nu[:, None]

    rates: List[np.ndarray] = []
    freqs: List[np.ndarray] = []
    coefficients: List[np.ndarray] = []
    rows: List[np.ndarray] = []
    cols: List[np.ndarray] = []
    for mode in P.modes:
        if mode.l == 0:
            pieces = [(0.0, mode.cos.astype(complex))]
        else:
            pieces = [
                (mode.l * P.omega, 0.5 * (mode.cos - 1j * mode.sin)),
                (-mode.l * P.omega, 0.5 * (mode.cos + 1j * mode.sin)),
            ]
        for frequency, coefficient in pieces:
            hat = S_inv @ coefficient @ S
            i, j = np.nonzero(np.abs(hat) > entry_cutoff)
            exponents = differences[i, j] + 1j * frequency
            rates.append(exponents.real)
            freqs.append(exponents.imag)
            coefficients.append(hat[i, j])
            rows.append(i)
            cols.append(j)

    rate = cluster_representatives(np.concatenate(rates), tol)
    freq = np.concatenate(freqs)
    coefficient = np.concatenate(coefficients)
    row = np.concatenate(rows)
    col = np.concatenate(cols)

    terms: List[TrigTerm] = []
    for a in np.unique(rate):
        members = np.flatnonzero(rate == a)
        b_abs = cluster_representatives(np.abs(freq[members]), tol)
        for b in np.unique(b_abs):
            group = members[b_abs == b]
            upper = group[freq[group] > 0]
            lower = group[freq[group] <= 0]
            plus = _scatter(n, row[upper], col[upper], coefficient[upper])
            minus = _scatter(n, row[lower], col[lower], coefficient[lower])
            M_plus = S @ plus @ S_inv
            M_minus = S @ minus @ S_inv
            ccos = (M_plus + M_minus).real
            dsin = -(M_plus - M_minus).imag if b else np.zeros((n, n))
            terms.append(TrigTerm(float(a), float(b), 0, ccos, dsin))

    series = canonicalize(terms, n, tol, prune)
    logger.debug("Conjugated perturbation expands into %d terms.", len(series.terms))
    return series


def _scatter(
    n: int, rows: np.ndarray, cols: np.ndarray, values: np.ndarray
) -> np.ndarray:
    matrix = np.zeros((n, n), dtype=complex)
    np.add.at(matrix, (rows, cols), values)
    return matrix

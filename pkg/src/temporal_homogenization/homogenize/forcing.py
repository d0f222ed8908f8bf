import logging
from typing import Any

import numpy as np
from numpy.polynomial.legendre import leggauss
from scipy.integrate import quad_vec

from ..algebra.matrix import as_matrix, mat_exp
from ..error import DimensionError, GridTooShort, InvalidParameter
from ..settings import DEFAULTS
from .system import (
    ConstantForcing,
    ForcingSpec,
    ForcingTerm,
    SampledForcing,
    ZeroForcing,
    forcing_dim,
)

__all__ = ["forcing_integral"]

logger = logging.getLogger(__name__)

GAUSS_NODES = 8
SINGULAR_CONDITION = 1e12


def forcing_integral(
    A: Any,
    f: ForcingSpec,
    t: float,
    quadrature_tolerance: float = DEFAULTS.quadrature_tolerance,
) -> np.ndarray:
    """Compute the integral of exp(-A s) f(s) over [0, t].

    Zero, constant and trigonometric polynomial forcing are integrated in
    closed form, one linear solve per term. A term resonant with A makes the
    solve singular and falls back to adaptive quadrature. Sampled forcing is
    integrated with Gauss-Legendre nodes on every grid interval.
    """
    A = as_matrix(A, "system matrix")
    n = A.shape[0]
    if forcing_dim(f) != n:
        raise DimensionError(f"The forcing has dimension {forcing_dim(f)}, A has {n}.")
    if not t >= 0:
        raise InvalidParameter(f"The integration time must be nonnegative, got {t}.")
    if isinstance(f, ZeroForcing) or t == 0:
        if isinstance(f, SampledForcing):
            _check_coverage(f, t)
        return np.zeros(n)
    if isinstance(f, ConstantForcing):
        term = ForcingTerm(0.0, 0.0, 0, f.value, np.zeros(n))
        return _term_integral(A, term, t, quadrature_tolerance)
    if isinstance(f, SampledForcing):
        return _sampled_integral(A, f, t)
    total = np.zeros(n)
    for term in f.terms:
        total += _term_integral(A, term, t, quadrature_tolerance)
    return total


def _term_integral(
    A: np.ndarray, term: ForcingTerm, t: float, quadrature_tolerance: float
) -> np.ndarray:
    n = A.shape[0]
    z = complex(term.a, term.b)
    M = z * np.eye(n) - A
    if np.linalg.cond(M) > SINGULAR_CONDITION:
        logger.info(
            "Forcing term (a=%.6g, b=%.6g, k=%d) is resonant with A;"
            " integrating by quadrature.",
            term.a,
            term.b,
            term.k,
        )
        return _quadrature(A, term, t, quadrature_tolerance)
    # s^k e^(z s) (c cos + d sin) is the real part of s^k e^(z s) (c - i d)
    w = term.ccos - 1j * term.dsin
    growth = np.exp(z * t) * mat_exp(-A, t)
    integral = np.linalg.solve(M, growth @ w - w)
    for power in range(1, term.k + 1):
        integral = np.linalg.solve(M, t**power * (growth @ w) - power * integral)
    return integral.real


def _quadrature(
    A: np.ndarray, term: ForcingTerm, t: float, quadrature_tolerance: float
) -> np.ndarray:
    def integrand(s: float) -> np.ndarray:
        value = s**term.k * np.exp(term.a * s) * (
            term.ccos * np.cos(term.b * s) + term.dsin * np.sin(term.b * s)
        )
        return mat_exp(-A, s) @ value

    result, _ = quad_vec(
        integrand, 0.0, t, epsabs=quadrature_tolerance, epsrel=quadrature_tolerance
    )
    return np.asarray(result, dtype=float)


def _check_coverage(f: SampledForcing, t: float) -> None:
    if f.times[0] > 0 or f.times[-1] < t:
        raise GridTooShort(
            f"Sampled forcing covers [{f.times[0]}, {f.times[-1]}], not [0, {t}]."
        )


def _sampled_integral(A: np.ndarray, f: SampledForcing, t: float) -> np.ndarray:
    _check_coverage(f, t)
    nodes, weights = leggauss(GAUSS_NODES)
    edges = np.concatenate(([0.0], f.times[(f.times > 0) & (f.times < t)], [t]))
    total = np.zeros(A.shape[0])
    for left, right in zip(edges[:-1], edges[1:]):
        half = (right - left) / 2
        for node, weight in zip(nodes, weights):
            s = left + half * (node + 1)
            value = np.array([np.interp(s, f.times, column) for column in f.values.T])
            total += half * weight * (mat_exp(-A, s) @ value)
    return total

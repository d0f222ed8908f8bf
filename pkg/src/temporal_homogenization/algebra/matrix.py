from typing import Any

import numpy as np
from scipy.linalg import expm

from ..error import DimensionError, ExpOverflow, InvalidParameter

__all__ = ["as_matrix", "conjugate", "mat_exp", "Mat"]

Mat = np.ndarray
"""Dense real square matrix stored as a two-dimensional float array."""


def as_matrix(data: Any, name: str = "matrix") -> Mat:
    """Convert data to a finite real square matrix.

    Scalars are promoted to 1x1 matrices.
    """
    matrix = np.atleast_2d(np.asarray(data, dtype=float))
    if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
        raise DimensionError(f"The {name} must be square, got shape {matrix.shape}.")
    if not np.all(np.isfinite(matrix)):
        raise InvalidParameter(f"The {name} has non-finite entries.")
    return matrix


def mat_exp(A: Any, t: float) -> Mat:
    """Compute exp(At).

    Uses the scaling-and-squaring Pade approximant of scipy. Raises
    ExpOverflow when the result leaves the floating point range.
    """
    A = as_matrix(A, "exponent matrix")
    if not np.isfinite(t):
        raise InvalidParameter(f"The time must be finite, got {t}.")
    with np.errstate(over="ignore", invalid="ignore"):
        result = expm(A * t)
    if not np.all(np.isfinite(result)):
        raise ExpOverflow(
            f"exp(At) overflows for t={t} and |A|={np.linalg.norm(A):.6g}."
        )
    return result


def conjugate(W: Any, W_inv: Any, M: Any) -> Mat:
    """Change the basis of M, returning W_inv @ M @ W."""
    W = np.atleast_2d(np.asarray(W))
    W_inv = np.atleast_2d(np.asarray(W_inv))
    M = np.atleast_2d(np.asarray(M))
    n = W.shape[0]
    if not (W.shape == W_inv.shape == M.shape == (n, n)):
        raise DimensionError(
            f"Cannot conjugate a matrix of shape {M.shape}"
            f" with {W.shape} and {W_inv.shape}."
        )
    return W_inv @ M @ W

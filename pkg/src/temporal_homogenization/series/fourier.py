from typing import Any, Dict, Iterable, List, NamedTuple, Tuple, Union

import numpy as np

from ..error import DimensionError, InvalidParameter
from ..utils.serialization import matrix_from_json, matrix_to_json

__all__ = [
    "fourier_evaluate",
    "fourier_from_json",
    "fourier_scale",
    "fourier_to_json",
    "make_fourier_matrix",
    "zero_fourier",
    "FourierMatrix",
    "FourierMode",
]


class FourierMode(NamedTuple):
    """Coefficients of cos(l w t) and sin(l w t) in a matrix Fourier series."""

    l: int  # noqa: E741
    cos: np.ndarray
    sin: np.ndarray


class FourierMatrix(NamedTuple):
    """A real matrix valued finite Fourier series with base frequency omega.

    P(t) = sum over modes of cos * cos(l omega t) + sin * sin(l omega t).
    Build instances with make_fourier_matrix, which validates and sorts the modes.
    """

    omega: float
    modes: Tuple[FourierMode, ...]
    dim: int

    @property
    def period(self) -> float:
        return 2 * np.pi / self.omega


def make_fourier_matrix(
    omega: float,
    modes: Iterable[Union[FourierMode, Tuple[int, Any, Any]]],
    dim: int = 0,
) -> FourierMatrix:
    """Create a validated Fourier matrix.

    Modes with the same index are summed and sorted by index. The dimension
    is taken from the modes; it only needs to be given for a series without
    modes.
    """
    if not omega > 0 or not np.isfinite(omega):
        raise InvalidParameter(f"The base frequency must be positive, got {omega}.")
    merged: Dict[int, List[np.ndarray]] = {}
    for l, cos, sin in modes:  # noqa: E741
        if int(l) != l or l < 0:
            raise InvalidParameter(
                f"Mode indices must be nonnegative integers, got {l}."
            )
        cos = np.atleast_2d(np.asarray(cos, dtype=float))
        sin = np.atleast_2d(np.asarray(sin, dtype=float))
        if not dim:
            dim = cos.shape[0]
        if cos.shape != (dim, dim) or sin.shape != (dim, dim):
            raise DimensionError(
                f"Mode {l} has shapes {cos.shape} and {sin.shape},"
                f" expected {dim}x{dim}."
            )
        if not (np.all(np.isfinite(cos)) and np.all(np.isfinite(sin))):
            raise InvalidParameter(f"Mode {l} has non-finite coefficients.")
        if l == 0 and np.any(sin):
            raise InvalidParameter("The constant mode cannot have a sine coefficient.")
        if l in merged:
            merged[int(l)][0] = merged[int(l)][0] + cos
            merged[int(l)][1] = merged[int(l)][1] + sin
        else:
            merged[int(l)] = [cos, sin]
    if dim < 1:
        raise DimensionError(
            "The dimension of a Fourier matrix without modes is needed."
        )
    return FourierMatrix(
        float(omega),
        tuple(FourierMode(l, *merged[l]) for l in sorted(merged)),  # noqa: E741
        dim,
    )


def zero_fourier(dim: int, omega: float = 1.0) -> FourierMatrix:
    """Return the zero perturbation of the given dimension."""
    return make_fourier_matrix(omega, (), dim)


def fourier_evaluate(P: FourierMatrix, t: Any) -> np.ndarray:
    """Evaluate P at a time or at an array of times.

    For an array of N times the result has shape (N, dim, dim).
    """
    times = np.asarray(t, dtype=float)
    result = np.zeros(times.shape + (P.dim, P.dim))
    for mode in P.modes:
        phase = (mode.l * P.omega * times)[..., None, None]
        result += mode.cos * np.cos(phase) + mode.sin * np.sin(phase)
    return result


def fourier_scale(P: FourierMatrix) -> float:
    """Return the largest Frobenius norm among the coefficient matrices."""
    norms = [np.linalg.norm(m) for mode in P.modes for m in (mode.cos, mode.sin)]
    return float(max(norms, default=0.0))


def fourier_to_json(P: FourierMatrix) -> Dict[str, Any]:
    return {
        "omega": P.omega,
        "modes": [
            {
                "l": mode.l,
                "cos": matrix_to_json(mode.cos),
                "sin": matrix_to_json(mode.sin),
            }
            for mode in P.modes
        ],
    }


def fourier_from_json(data: Dict[str, Any], dim: int = 0) -> FourierMatrix:
    """Read the JSON form {"omega": w, "modes": [{"l", "cos", "sin"}]}.

    A missing "cos" or "sin" entry means a zero coefficient.
    """
    modes = []
    for mode in data.get("modes", []):
        cos = mode.get("cos")
        sin = mode.get("sin")
        if cos is None and sin is None:
            raise InvalidParameter(f"Mode {mode.get('l')} has no coefficients.")
        cos = matrix_from_json(cos, dim or None) if cos is not None else None
        sin = matrix_from_json(sin, dim or None) if sin is not None else None
        size = (cos if cos is not None else sin).shape[0]  # type: ignore
        zero = np.zeros((size, size))
        modes.append(
            (
                mode["l"],
                cos if cos is not None else zero,
                sin if sin is not None else zero,
            )
        )
    return make_fourier_matrix(float(data["omega"]), modes, dim)

import logging
from pathlib import Path
from typing import Any, Dict, Iterable, List, NamedTuple, Optional, Tuple, Union

import numpy as np

from ..algebra.matrix import Mat, as_matrix
from ..error import DimensionError, GridTooShort, InvalidParameter
from ..series.fourier import FourierMatrix, fourier_from_json, fourier_to_json
from ..settings import DEFAULTS
from ..utils.serialization import (
    matrix_from_json,
    matrix_to_json,
    vector_from_json,
    write_csv,
)

__all__ = [
    "evaluate_forcing",
    "forcing_dim",
    "forcing_from_json",
    "forcing_to_json",
    "make_linear_system",
    "make_sampled_forcing",
    "make_trig_forcing",
    "system_from_json",
    "system_to_json",
    "trajectory_to_rows",
    "validity_horizon",
    "write_trajectory",
    "ConstantForcing",
    "ForcingSpec",
    "ForcingTerm",
    "LinearSystem",
    "SampledForcing",
    "TrigForcing",
    "Trajectory",
    "ZeroForcing",
]

logger = logging.getLogger(__name__)


class ZeroForcing(NamedTuple):
    dim: int


class ConstantForcing(NamedTuple):
    value: np.ndarray


class ForcingTerm(NamedTuple):
    """The vector function t^k e^(a t) (ccos cos(b t) + dsin sin(b t))."""

    a: float
    b: float
    k: int
    ccos: np.ndarray
    dsin: np.ndarray


class TrigForcing(NamedTuple):
    terms: Tuple[ForcingTerm, ...]
    dim: int


class SampledForcing(NamedTuple):
    """Samples of f on a strictly increasing grid, linearly interpolated."""

    times: np.ndarray
    values: np.ndarray


ForcingSpec = Union[ZeroForcing, ConstantForcing, TrigForcing, SampledForcing]


def forcing_dim(f: ForcingSpec) -> int:
    if isinstance(f, ConstantForcing):
        return f.value.shape[0]
    if isinstance(f, SampledForcing):
        return f.values.shape[1]
    return f.dim


def make_trig_forcing(terms: Iterable[ForcingTerm], dim: int) -> TrigForcing:
    """Create trigonometric polynomial forcing with unique keys (a, b, k).

    Terms with equal keys are summed and negative frequencies are folded.
    """
    merged: Dict[Tuple[float, float, int], List[np.ndarray]] = {}
    for a, b, k, ccos, dsin in terms:
        ccos = np.asarray(ccos, dtype=float)
        dsin = np.asarray(dsin, dtype=float)
        if ccos.shape != (dim,) or dsin.shape != (dim,):
            raise DimensionError(
                f"Forcing term ({a}, {b}, {k}) does not have length {dim}."
            )
        if int(k) != k or k < 0:
            raise InvalidParameter(
                f"Forcing powers must be nonnegative integers, got {k}."
            )
        if b < 0:
            b, dsin = -b, -dsin
        key = (float(a), float(b), int(k))
        entry = merged.setdefault(key, [np.zeros(dim), np.zeros(dim)])
        entry[0] = entry[0] + ccos
        if b:
            entry[1] = entry[1] + dsin
    return TrigForcing(
        tuple(ForcingTerm(a, b, k, *merged[a, b, k]) for a, b, k in sorted(merged)), dim
    )


def make_sampled_forcing(times: Any, values: Any) -> SampledForcing:
    times = np.asarray(times, dtype=float)
    values = np.asarray(values, dtype=float)
    if times.ndim != 1 or values.ndim != 2 or values.shape[0] != times.shape[0]:
        raise DimensionError(
            "Sampled forcing needs one vector per time,"
            f" got {values.shape} for {times.shape}."
        )
    if times.size < 2 or np.any(np.diff(times) <= 0):
        raise InvalidParameter("Sampled forcing needs a strictly increasing grid.")
    if not np.all(np.isfinite(values)):
        raise InvalidParameter("Sampled forcing values must be finite.")
    return SampledForcing(times, values)


def evaluate_forcing(f: ForcingSpec, t: float) -> np.ndarray:
    """Evaluate f at time t."""
    if isinstance(f, ZeroForcing):
        return np.zeros(f.dim)
    if isinstance(f, ConstantForcing):
        return f.value.copy()
    if isinstance(f, TrigForcing):
        value = np.zeros(f.dim)
        for term in f.terms:
            value += t**term.k * np.exp(term.a * t) * (
                term.ccos * np.cos(term.b * t) + term.dsin * np.sin(term.b * t)
            )
        return value
    if not f.times[0] <= t <= f.times[-1]:
        raise GridTooShort(
            f"Sampled forcing covers [{f.times[0]}, {f.times[-1]}], not t={t}."
        )
    return np.array([np.interp(t, f.times, column) for column in f.values.T])


class LinearSystem(NamedTuple):
    """The system x' = A x + epsilon P(t) x + f(t) with x(0) = x0."""

    A: Mat
    P: FourierMatrix
    epsilon: float
    f: ForcingSpec
    x0: np.ndarray

    @property
    def dim(self) -> int:
        return self.A.shape[0]


def make_linear_system(
    A: Any,
    P: FourierMatrix,
    epsilon: float,
    f: Optional[ForcingSpec] = None,
    x0: Any = None,
    epsilon_warning: float = DEFAULTS.epsilon_warning,
) -> LinearSystem:
    """Create a validated linear system.

    Missing forcing means f = 0 and a missing initial state means x0 = 0.
    """
    A = as_matrix(A, "system matrix")
    n = A.shape[0]
    if P.dim != n:
        raise DimensionError(f"The perturbation has dimension {P.dim}, A has {n}.")
    if not epsilon > 0 or not np.isfinite(epsilon):
        raise InvalidParameter(f"Epsilon must be positive, got {epsilon}.")
    if epsilon > epsilon_warning:
        logger.warning(
            "Epsilon %.3g is not small; homogenization may be inaccurate.", epsilon
        )
    if f is None:
        f = ZeroForcing(n)
    if forcing_dim(f) != n:
        raise DimensionError(f"The forcing has dimension {forcing_dim(f)}, A has {n}.")
    x0 = np.zeros(n) if x0 is None else np.asarray(x0, dtype=float)
    if x0.shape != (n,):
        raise DimensionError(
            f"The initial state has shape {x0.shape}, expected ({n},)."
        )
    return LinearSystem(A, P, float(epsilon), f, x0)


def validity_horizon(
    system: LinearSystem, horizon_constant: float = DEFAULTS.horizon_constant
) -> float:
    """Time up to which the homogenized solution is expected to be O(epsilon) close."""
    return horizon_constant / system.epsilon


class Trajectory(NamedTuple):
    """States sampled on an increasing time grid."""

    times: np.ndarray
    states: np.ndarray
    method: str
    step_meta: Dict[str, Any] = {}

    @property
    def dim(self) -> int:
        return self.states.shape[1]


def trajectory_to_rows(trajectory: Trajectory) -> List[List[float]]:
    return [[t, *state] for t, state in zip(trajectory.times, trajectory.states)]


def write_trajectory(path: Union[str, Path], trajectory: Trajectory) -> None:
    """Write a trajectory as CSV with header t,x1,...,xn."""
    header = ["t"] + [f"x{i + 1}" for i in range(trajectory.dim)]
    write_csv(path, header, trajectory_to_rows(trajectory))


def forcing_to_json(f: ForcingSpec) -> Dict[str, Any]:
    if isinstance(f, ZeroForcing):
        return {"kind": "zero"}
    if isinstance(f, ConstantForcing):
        return {"kind": "constant", "value": f.value.tolist()}
    if isinstance(f, TrigForcing):
        return {
            "kind": "trigpoly",
            "terms": [
                {
                    "a": t.a,
                    "b": t.b,
                    "k": t.k,
                    "cos": t.ccos.tolist(),
                    "sin": t.dsin.tolist(),
                }
                for t in f.terms
            ],
        }
    return {"kind": "sampled", "times": f.times.tolist(), "values": f.values.tolist()}


def forcing_from_json(data: Optional[Dict[str, Any]], dim: int) -> ForcingSpec:
    """Read forcing given as {"kind": "zero" | "constant" | "trigpoly" | "sampled"}."""
    if not data:
        return ZeroForcing(dim)
    kind = data.get("kind", "zero")
    if kind == "zero":
        return ZeroForcing(dim)
    if kind == "constant":
        return ConstantForcing(vector_from_json(data["value"], dim))
    if kind == "trigpoly":
        zero = [0.0] * dim
        return make_trig_forcing(
            (
                ForcingTerm(
                    float(term.get("a", 0.0)),
                    float(term.get("b", 0.0)),
                    int(term.get("k", 0)),
                    vector_from_json(term.get("cos", zero), dim),
                    vector_from_json(term.get("sin", zero), dim),
                )
                for term in data["terms"]
            ),
            dim,
        )
    if kind == "sampled":
        return make_sampled_forcing(data["times"], data["values"])
    raise InvalidParameter(f"Unknown forcing kind {kind!r}.")


def system_to_json(system: LinearSystem) -> Dict[str, Any]:
    return {
        "A": matrix_to_json(system.A),
        "P": fourier_to_json(system.P),
        "epsilon": system.epsilon,
        "forcing": forcing_to_json(system.f),
        "x0": system.x0.tolist(),
    }


def system_from_json(data: Dict[str, Any]) -> LinearSystem:
    """Read {"A", "P", "epsilon", "forcing", "x0"}; forcing and x0 are optional."""
    A = matrix_from_json(data["A"])
    n = A.shape[0]
    P = fourier_from_json(data.get("P") or {"omega": 1.0}, n)
    return make_linear_system(
        A,
        P,
        float(data["epsilon"]),
        forcing_from_json(data.get("forcing"), n),
        vector_from_json(data["x0"], n) if "x0" in data else None,
    )

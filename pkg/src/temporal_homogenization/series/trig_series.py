from math import factorial
from typing import Dict, Iterable, List, NamedTuple, Tuple

import numpy as np

from ..error import DimensionError

__all__ = [
    "add_series",
    "canonicalize",
    "cluster_representatives",
    "evaluate",
    "integrate_series",
    "scale_series",
    "TermKey",
    "TrigSeries",
    "TrigTerm",
]

TermKey = Tuple[float, float, int]


class TrigTerm(NamedTuple):
    """The matrix function t^k e^(a t) (ccos cos(b t) + dsin sin(b t))."""

    a: float
    b: float
    k: int
    ccos: np.ndarray
    dsin: np.ndarray

    @property
    def key(self) -> TermKey:
        return self.a, self.b, self.k

    @property
    def norm(self) -> float:
        return float(np.hypot(np.linalg.norm(self.ccos), np.linalg.norm(self.dsin)))


class TrigSeries(NamedTuple):
    """A canonical sum of trigonometric-exponential terms.

    Canonical means unique keys (a, b, k), no pruned terms, b >= 0, no sine
    coefficient at b = 0, and terms sorted by (a, k, b).
    """

    terms: Tuple[TrigTerm, ...]
    dim: int

    @property
    def keys(self) -> List[TermKey]:
        return [term.key for term in self.terms]


def cluster_representatives(values: np.ndarray, tol: float) -> np.ndarray:
    """Replace values that lie within chains of gaps <= tol by a common value.

    Values within tol of zero snap the whole cluster to exactly zero; other
    clusters are represented by their mean.
    """
    values = np.asarray(values, dtype=float)
    result = np.empty_like(values)
    if not values.size:
        return result
    order = np.argsort(values, kind="stable")
    sorted_values = values[order]
    gaps = np.flatnonzero(np.diff(sorted_values) > tol) + 1
    for group in np.split(np.arange(values.size), gaps):
        members = sorted_values[group]
        if np.any(np.abs(members) <= tol):
            result[order[group]] = 0.0
        else:
            result[order[group]] = members.mean()
    return result


def canonicalize(
    terms: Iterable[TrigTerm], dim: int, tol: float = 0.0, prune: float = 0.0
) -> TrigSeries:
    """Bring a list of terms into canonical form.

    Exponential rates and frequencies closer than tol are merged, terms
    whose coefficient norm is below prune are dropped.
    """
    terms = list(terms)
    for term in terms:
        if term.ccos.shape != (dim, dim) or term.dsin.shape != (dim, dim):
            raise DimensionError(
                f"Term {term.key} has coefficient shape {term.ccos.shape},"
                f" expected {dim}x{dim}."
            )
    if not terms:
        return TrigSeries((), dim)
    signs = np.array([-1.0 if term.b < 0 else 1.0 for term in terms])
    rates = cluster_representatives(np.array([term.a for term in terms]), tol)
    freqs = np.abs([term.b for term in terms])
    merged: Dict[TermKey, List[np.ndarray]] = {}
    for rate in np.unique(rates):
        same_rate = np.flatnonzero(rates == rate)
        for power in {terms[i].k for i in same_rate}:
            group = [i for i in same_rate if terms[i].k == power]
            for i, freq in zip(group, cluster_representatives(freqs[group], tol)):
                key = (float(rate), float(freq), int(power))
                entry = merged.setdefault(
                    key, [np.zeros((dim, dim)), np.zeros((dim, dim))]
                )
                entry[0] = entry[0] + terms[i].ccos
                if freq:
                    entry[1] = entry[1] + signs[i] * terms[i].dsin
    result = [
        TrigTerm(a, b, k, ccos, dsin)
        for (a, b, k), (ccos, dsin) in merged.items()
        if np.hypot(np.linalg.norm(ccos), np.linalg.norm(dsin)) > prune
    ]
    result.sort(key=lambda term: (term.a, term.k, term.b))
    return TrigSeries(tuple(result), dim)


def evaluate(series: TrigSeries, t: float) -> np.ndarray:
    """Evaluate the series at time t."""
    value = np.zeros((series.dim, series.dim))
    for term in series.terms:
        envelope = t**term.k * np.exp(term.a * t)
        if term.b:
            value += envelope * (
                term.ccos * np.cos(term.b * t) + term.dsin * np.sin(term.b * t)
            )
        else:
            value += envelope * term.ccos
    return value


def add_series(*series: TrigSeries, tol: float = 0.0, prune: float = 0.0) -> TrigSeries:
    """Add series termwise."""
    dims = {s.dim for s in series}
    if len(dims) != 1:
        raise DimensionError(f"Cannot add series of dimensions {sorted(dims)}.")
    return canonicalize(
        (term for s in series for term in s.terms), dims.pop(), tol, prune
    )


def scale_series(series: TrigSeries, alpha: float) -> TrigSeries:
    """Multiply every coefficient by alpha."""
    if not alpha:
        return TrigSeries((), series.dim)
    return TrigSeries(
        tuple(
            term._replace(ccos=alpha * term.ccos, dsin=alpha * term.dsin)
            for term in series.terms
        ),
        series.dim,
    )


def _power_exponential_integral(k: int, z: complex, t: float) -> complex:
    """Integrate s^k e^(z s) over [0, t]."""
    if z == 0:
        return t ** (k + 1) / (k + 1)
    if abs(z * t) < 1e-3:
        # Taylor expansion near z t = 0
        return sum(
            z**m * t ** (k + m + 1) / (factorial(m) * (k + m + 1)) for m in range(12)
        )
    value = (np.exp(z * t) - 1) / z
    for power in range(1, k + 1):
        value = (t**power * np.exp(z * t) - power * value) / z
    return complex(value)


def integrate_series(series: TrigSeries, t: float) -> np.ndarray:
    """Integrate the series over [0, t] in closed form."""
    value = np.zeros((series.dim, series.dim))
    for term in series.terms:
        integral = _power_exponential_integral(term.k, complex(term.a, term.b), t)
        value += term.ccos * integral.real + term.dsin * integral.imag
    return value

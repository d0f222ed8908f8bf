from typing import NamedTuple, Tuple

from ..series.trig_series import TermKey, TrigSeries, TrigTerm

__all__ = [
    "growth_operator",
    "is_growing",
    "is_growth_term",
    "BoundednessVerdict",
]


class BoundednessVerdict(NamedTuple):
    """Whether exp(-At) P(t) exp(At) stays bounded, with the culprits if not."""

    bounded: bool
    offending_terms: Tuple[TermKey, ...] = ()


def is_growing(term: TrigTerm) -> bool:
    """Check whether the term grows without bound."""
    return term.a > 0 or (term.a == 0 and term.k != 0)


def is_growth_term(term: TrigTerm) -> bool:
    """Check whether the growth operator keeps the term.

    These are the growing terms and the constant term (a, b, k) = (0, 0, 0).
    """
    return is_growing(term) or (term.a == 0 and term.k == 0 and term.b == 0)


def growth_operator(series: TrigSeries) -> Tuple[TrigSeries, BoundednessVerdict]:
    """Apply the growth operator to a canonical series.

    Returns the growth component and the boundedness verdict. The series is
    bounded if and only if its growth component is at most a constant term.
    """
    growth = tuple(term for term in series.terms if is_growth_term(term))
    offending = tuple(term.key for term in growth if is_growing(term))
    return TrigSeries(growth, series.dim), BoundednessVerdict(not offending, offending)

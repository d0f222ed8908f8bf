import numpy as np

from temporal_homogenization import growth_operator, TrigSeries, TrigTerm
from temporal_homogenization.series import add_series, canonicalize, scale_series

C = np.array([[1.0, -1.0], [0.5, 2.0]])
D = np.array([[0.0, 1.0], [1.0, 0.0]])
zero = np.zeros((2, 2))


def series_of(*terms):
    return canonicalize(terms, 2)


def describe_growth_operator():
    def keeps_constant_term():
        growth, verdict = growth_operator(series_of(TrigTerm(0, 0, 0, C, zero)))
        assert growth.keys == [(0.0, 0.0, 0)]
        assert verdict.bounded
        assert verdict.offending_terms == ()

    def removes_decaying_terms():
        growth, verdict = growth_operator(series_of(TrigTerm(-1, 0, 0, C, zero)))
        assert growth.terms == ()
        assert verdict.bounded

    def removes_pure_oscillations():
        growth, verdict = growth_operator(series_of(TrigTerm(0, 3, 0, C, D)))
        assert growth.terms == ()
        assert verdict.bounded

    def flags_secular_terms():
        growth, verdict = growth_operator(series_of(TrigTerm(0, 0, 1, C, zero)))
        assert growth.keys == [(0.0, 0.0, 1)]
        assert not verdict.bounded
        assert verdict.offending_terms == ((0.0, 0.0, 1),)

    def flags_exponentially_growing_terms():
        series = series_of(TrigTerm(0.5, 2, 0, C, D), TrigTerm(0, 0, 0, C, zero))
        growth, verdict = growth_operator(series)
        assert growth.keys == [(0.0, 0.0, 0), (0.5, 2.0, 0)]
        assert verdict.offending_terms == ((0.5, 2.0, 0),)

    def handles_empty_series():
        growth, verdict = growth_operator(TrigSeries((), 3))
        assert growth.dim == 3
        assert verdict.bounded

    def is_linear():
        first = series_of(
            TrigTerm(0, 0, 0, C, zero),
            TrigTerm(1, 0, 0, D, zero),
            TrigTerm(0, 2, 0, C, D),
        )
        second = series_of(TrigTerm(0, 0, 0, D, zero), TrigTerm(-2, 1, 0, C, D))
        alpha = -1.5
        left, _ = growth_operator(add_series(scale_series(first, alpha), second))
        right = add_series(
            scale_series(growth_operator(first)[0], alpha), growth_operator(second)[0]
        )
        assert left.keys == right.keys
        for lterm, rterm in zip(left.terms, right.terms):
            assert np.allclose(lterm.ccos, rterm.ccos)
            assert np.allclose(lterm.dsin, rterm.dsin)

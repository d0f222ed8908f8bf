"""temporal_homogenization.series"""

# Finite matrix Fourier series P(t)
from .fourier import (
    fourier_evaluate,
    fourier_from_json,
    fourier_scale,
    fourier_to_json,
    make_fourier_matrix,
    zero_fourier,
    FourierMatrix,
    FourierMode,
)

# Trigonometric-exponential term expansions
from .trig_series import (
    add_series,
    canonicalize,
    cluster_representatives,
    evaluate,
    integrate_series,
    scale_series,
    TermKey,
    TrigSeries,
    TrigTerm,
)

# Expansion of exp(-At) P(t) exp(At)
from .conjugation import conjugate_series

__all__ = [
    "add_series",
    "canonicalize",
    "cluster_representatives",
    "conjugate_series",
    "evaluate",
    "fourier_evaluate",
    "fourier_from_json",
    "fourier_scale",
    "fourier_to_json",
    "FourierMatrix",
    "FourierMode",
    "integrate_series",
    "make_fourier_matrix",
    "scale_series",
    "TermKey",
    "TrigSeries",
    "TrigTerm",
    "zero_fourier",
]

"""temporal_homogenization.growth"""

# The growth operator and the boundedness verdict
from .growth_operator import (
    growth_operator,
    is_growing,
    is_growth_term,
    BoundednessVerdict,
)

# The two routes to the effective matrix
from .effective import (
    effective_growth_rate,
    effective_matrix_algebraic,
    effective_matrix_averaged,
    EffectiveModel,
)

__all__ = [
    "BoundednessVerdict",
    "effective_growth_rate",
    "effective_matrix_algebraic",
    "effective_matrix_averaged",
    "EffectiveModel",
    "growth_operator",
    "is_growing",
    "is_growth_term",
]

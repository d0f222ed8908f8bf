"""Test utilities for temporal_homogenization"""

from .instances import (
    bounded_instance,
    bounded_instances,
    bounded_siblings,
    random_diagonalizable,
    random_fourier,
    skewed_sibling,
    threshold_banks,
    unbounded_instances,
    UNIT_BANK,
)

__all__ = [
    "bounded_instance",
    "bounded_instances",
    "bounded_siblings",
    "random_diagonalizable",
    "random_fourier",
    "skewed_sibling",
    "threshold_banks",
    "unbounded_instances",
    "UNIT_BANK",
]

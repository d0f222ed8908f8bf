"""temporal_homogenization.circuits"""

from .bank import (
    CircuitBank,
    bank_from_json,
    bank_to_json,
    build_bank,
    coupling_transform,
    drive_frequency,
    effective_delta,
    make_bank,
    minimum_circuits,
    permute_circuits,
    resonant_frequency,
    super_resonance_threshold,
)
from .constitutive import (
    build_bank_constitutive,
    constitutive_transform,
    verify_growth_constitutive,
)
from .verify import GrowthCheck, fit_growth_rate, verify_growth

__all__ = [
    "bank_from_json",
    "bank_to_json",
    "build_bank",
    "build_bank_constitutive",
    "constitutive_transform",
    "coupling_transform",
    "drive_frequency",
    "effective_delta",
    "fit_growth_rate",
    "make_bank",
    "minimum_circuits",
    "permute_circuits",
    "resonant_frequency",
    "super_resonance_threshold",
    "verify_growth",
    "verify_growth_constitutive",
    "CircuitBank",
    "GrowthCheck",
]

"""temporal_homogenization.algebra"""

from .matrix import as_matrix, conjugate, mat_exp, Mat
from .spectrum import spectral_decompose, SpectralBlock, Spectrum

__all__ = [
    "as_matrix",
    "conjugate",
    "mat_exp",
    "Mat",
    "spectral_decompose",
    "SpectralBlock",
    "Spectrum",
]

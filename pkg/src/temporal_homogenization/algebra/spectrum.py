import logging
from typing import Any, List, NamedTuple, Tuple

import numpy as np
from scipy.linalg import block_diag, eigvals, svd

from ..error import DefectiveMatrix
from ..settings import DEFAULTS
from .matrix import Mat, as_matrix

__all__ = ["spectral_decompose", "SpectralBlock", "Spectrum"]

logger = logging.getLogger(__name__)


class SpectralBlock(NamedTuple):
    """A cluster of eigenvalues lam +/- i mu of a real matrix.

    Blocks with mu > 0 have size 2 and stand for the real rotation-scaling
    block [[lam, mu], [-mu, lam]]; the block repeats multiplicity times.
    """

    lam: float
    mu: float
    size: int
    multiplicity: int = 1


class Spectrum(NamedTuple):
    """Real block diagonalization A = V J V^-1."""

    blocks: Tuple[SpectralBlock, ...]
    V: Mat
    V_inv: Mat
    residual: float

    @property
    def dim(self) -> int:
        return self.V.shape[0]

    @property
    def J(self) -> Mat:
        """The real block diagonal matrix of the decomposition."""
        return block_diag(*(_real_block(block) for block in self._expanded()))

    @property
    def A(self) -> Mat:
        """The matrix reassembled from the decomposition."""
        return self.V @ self.J @ self.V_inv

    def complex_modes(self) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
        """Return (S, S_inv, nu) with A = S diag(nu) S_inv over the complex field.

        Each 2x2 block is diagonalized by the fixed unitary matrix
        [[1, 1], [i, -i]] / sqrt(2), so S = V W with W block diagonal.
        """
        q = np.array([[1.0, 1.0], [1j, -1j]]) / np.sqrt(2.0)
        factors: List[np.ndarray] = []
        nu: List[complex] = []
        for block in self._expanded():
            if block.size == 1:
                factors.append(np.ones((1, 1), dtype=complex))
                nu.append(complex(block.lam))
            else:
                factors.append(q)
                nu.extend([complex(block.lam, block.mu), complex(block.lam, -block.mu)])
        W = block_diag(*factors)
        return self.V @ W, W.conj().T @ self.V_inv, np.array(nu)

    def _expanded(self) -> List[SpectralBlock]:
        return [block for block in self.blocks for _ in range(block.multiplicity)]


def _real_block(block: SpectralBlock) -> np.ndarray:
    if block.size == 1:
        return np.array([[block.lam]])
    return np.array([[block.lam, block.mu], [-block.mu, block.lam]])


def _cluster_values(values: np.ndarray, tol: float) -> List[np.ndarray]:
    """Split sorted values into index groups separated by gaps larger than tol."""
    order = np.argsort(values, kind="stable")
    gaps = np.flatnonzero(np.diff(values[order]) > tol) + 1
    return np.split(order, gaps)


def _cluster_eigenvalues(eigenvalues: np.ndarray, tol: float) -> List[np.ndarray]:
    clusters = []
    for by_real in _cluster_values(eigenvalues.real, tol):
        for by_imag in _cluster_values(eigenvalues[by_real].imag, tol):
            clusters.append(eigenvalues[by_real][by_imag])
    return clusters


def _normalize_phase(vectors: np.ndarray) -> np.ndarray:
    """Rotate every column so that its largest component is real and positive."""
    normalized = vectors / np.linalg.norm(vectors, axis=0)
    rows = np.argmax(np.abs(normalized), axis=0)
    pivots = normalized[rows, np.arange(normalized.shape[1])]
    return normalized * (np.abs(pivots) / pivots)


def _eigenspace(
    A: np.ndarray, value: complex, multiplicity: int, null_tol: float
) -> np.ndarray:
    shifted = A - value * np.eye(A.shape[0])
    _u, singular, vh = svd(shifted)
    if singular[-multiplicity] > null_tol:
        nullity = int(np.sum(singular <= null_tol))
        raise DefectiveMatrix(
            f"Eigenvalue {value:.6g} has multiplicity {multiplicity}"
            f" but only {nullity} independent eigenvectors."
        )
    return _normalize_phase(vh[-multiplicity:].conj().T)


def spectral_decompose(
    A: Any,
    tol: float = DEFAULTS.cluster_tolerance,
    decomposition_tol: float = DEFAULTS.decomposition_tolerance,
) -> Spectrum:
    """Compute the real block spectral decomposition of A.

    Eigenvalues closer than tol * |A| are clustered and snapped to their
    mean. Each cluster must have a full eigenspace, otherwise the matrix is
    refused as defective. The eigenvectors of complex clusters are split into
    real and imaginary parts, which turns A into real 2x2 rotation-scaling
    blocks. Blocks are ordered by decreasing real part, then increasing mu.
    """
    A = as_matrix(A, "system matrix")
    n = A.shape[0]
    scale = float(np.linalg.norm(A)) or 1.0
    cluster_tol = tol * scale
    null_tol = 100 * cluster_tol

    blocks: List[SpectralBlock] = []
    columns: List[np.ndarray] = []
    for cluster in _cluster_eigenvalues(eigvals(A), cluster_tol):
        mean = complex(np.mean(cluster))
        if mean.imag < -cluster_tol:
            continue  # represented by the conjugate cluster
        multiplicity = len(cluster)
        if abs(mean.imag) <= cluster_tol:
            basis = _eigenspace(A, mean.real, multiplicity, null_tol).real
            blocks.append(SpectralBlock(mean.real, 0.0, 1, multiplicity))
            columns.append(basis)
        else:
            basis = _eigenspace(A, mean, multiplicity, null_tol)
            pairs = np.empty((n, 2 * multiplicity))
            pairs[:, 0::2] = basis.real
            pairs[:, 1::2] = basis.imag
            blocks.append(SpectralBlock(mean.real, mean.imag, 2, multiplicity))
            columns.append(pairs)

    order = sorted(range(len(blocks)), key=lambda i: (-blocks[i].lam, blocks[i].mu))
    blocks = [blocks[i] for i in order]
    V = np.hstack([columns[i] for i in order])
    if V.shape != (n, n):
        raise DefectiveMatrix(
            f"Found {V.shape[1]} eigenvector columns for a {n}x{n} matrix."
        )
    try:
        V_inv = np.linalg.inv(V)
    except np.linalg.LinAlgError as error:
        raise DefectiveMatrix("The eigenvector basis is singular.") from error

    spectrum = Spectrum(tuple(blocks), V, V_inv, 0.0)
    residual = float(np.linalg.norm(spectrum.A - A)) / scale
    if not residual <= decomposition_tol:
        raise DefectiveMatrix(
            f"The eigenvector basis is too ill-conditioned: residual {residual:.3g}."
        )
    logger.debug("Decomposed %dx%d matrix into %d blocks.", n, n, len(blocks))
    return spectrum._replace(residual=residual)

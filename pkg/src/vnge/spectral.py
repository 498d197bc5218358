"""Dense symmetric eigenvalues and the exact von Neumann entropies.

The entropy of a graph is the Shannon entropy of the eigenvalue spectrum
of its trace-one matrix, in nats, with the convention 0 ln 0 = 0.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import NoConvergenceError, NotNormalizedError, NotSymmetricError
from .graph import DensityKind, Graph, density_matrix

# Eigensolvers emit tiny negatives for PSD input; anything in [-CLAMP_EPS, 0)
# is treated as an exact zero. Larger negatives mean the input was not PSD.
CLAMP_EPS = 1e-9

SYMMETRY_TOL = 1e-10
NORMALIZATION_TOL = 1e-8


@dataclass(frozen=True)
class Spectrum:
    """Ascending real eigenvalues, optionally tagged with their density kind."""

    values: np.ndarray
    kind: DensityKind | None = None

    def __len__(self) -> int:
        return len(self.values)


def symmetric_eigenvalues(matrix: np.ndarray, kind: DensityKind | None = None) -> Spectrum:
    """Eigenvalues of a symmetric matrix, sorted ascending."""
    m = np.asarray(matrix, dtype=np.float64)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise NotSymmetricError(f"expected a square matrix, got shape {m.shape}")
    if m.size and np.max(np.abs(m - m.T)) > SYMMETRY_TOL:
        raise NotSymmetricError("matrix is not symmetric within 1e-10")
    try:
        vals = np.linalg.eigvalsh(m)
    except np.linalg.LinAlgError as exc:
        raise NoConvergenceError(str(exc)) from exc
    return Spectrum(np.sort(vals), kind)


def clamp_density_spectrum(spectrum: Spectrum) -> Spectrum:
    """Zero out tiny negative eigenvalues and renormalize to sum exactly 1."""
    vals = np.asarray(spectrum.values, dtype=np.float64)
    if vals.min(initial=0.0) < -CLAMP_EPS:
        raise NotNormalizedError(
            f"eigenvalue {vals.min():.3e} below -{CLAMP_EPS:g}; input not a density matrix"
        )
    vals = np.clip(vals, 0.0, 1.0)
    total = vals.sum()
    if abs(total - 1.0) > NORMALIZATION_TOL:
        raise NotNormalizedError(f"spectrum sums to {total!r}, expected 1")
    return Spectrum(vals / total, spectrum.kind)


def entropy_of_spectrum(spectrum: Spectrum) -> float:
    """Shannon entropy -sum(lam * ln lam) of a clamped trace-one spectrum."""
    vals = np.asarray(spectrum.values, dtype=np.float64)
    if vals.min(initial=0.0) < 0.0 or abs(vals.sum() - 1.0) > NORMALIZATION_TOL:
        raise NotNormalizedError("spectrum must be clamped and sum to 1")
    pos = vals[vals > 0.0]
    return float(-np.sum(pos * np.log(pos))) + 0.0


def density_spectrum(g: Graph, kind: DensityKind) -> Spectrum:
    """Clamped, renormalized spectrum of the graph's trace-one matrix."""
    return clamp_density_spectrum(symmetric_eigenvalues(density_matrix(g, kind), kind))


def von_neumann_entropy(g: Graph, kind: DensityKind) -> float:
    """Exact graph entropy in nats for the chosen density kind."""
    return entropy_of_spectrum(density_spectrum(g, kind))


def entropies_from_stacked_eigenvalues(eigenvalues: np.ndarray) -> np.ndarray:
    """Row-wise entropy for a (batch, n) array of density-matrix eigenvalues.

    Same clamp-and-renormalize treatment as the scalar path, vectorized for
    candidate-edge sweeps.
    """
    vals = np.clip(eigenvalues, 0.0, 1.0)
    vals = vals / vals.sum(axis=1, keepdims=True)
    with np.errstate(divide="ignore", invalid="ignore"):
        terms = np.where(vals > 0.0, vals * np.log(vals), 0.0)
    return -terms.sum(axis=1) + 0.0

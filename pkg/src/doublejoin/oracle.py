"""Dense symmetric eigendecomposition with residual certificates.

This is the ground truth every closed-form result is compared against, so
it deliberately does nothing clever: LAPACK ``syevd`` through
``numpy.linalg.eigh``, followed by explicit residual, orthogonality and
reconstruction checks.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence, Union

import numpy as np

from .errors import ConsistencyError
from .graph import Graph, adjacency_matrix, laplacian, signless_laplacian

SPECTRUM_TOL = 1e-8
SYMMETRY_TOL = 1e-12


@dataclass(frozen=True)
class SpectralMultiset:
    """Eigenvalues sorted ascending, compared as a multiset up to ``tolerance``."""

    values: tuple[float, ...]
    tolerance: float = SPECTRUM_TOL

    def __init__(self, values: Iterable[float], tolerance: float = SPECTRUM_TOL) -> None:
        if tolerance <= 0:
            raise ValueError("tolerance must be positive")
        object.__setattr__(self, "values", tuple(sorted(float(v) for v in values)))
        object.__setattr__(self, "tolerance", float(tolerance))

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self) -> Iterator[float]:
        return iter(self.values)

    def __getitem__(self, i):
        return self.values[i]

    def as_array(self) -> np.ndarray:
        return np.asarray(self.values, dtype=float)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SpectralMultiset):
            return NotImplemented
        return spectra_equal(self, other, max(self.tolerance, other.tolerance))

    __hash__ = None  # type: ignore[assignment]


@dataclass(frozen=True)
class EigenPair:
    value: float
    vector: np.ndarray = field(repr=False)
    residual: float
    family: str = ""


SpectrumLike = Union[SpectralMultiset, Sequence[float], np.ndarray]


def _frobenius_scale(a: np.ndarray) -> float:
    return max(1.0, float(np.linalg.norm(a)))


def check_symmetric(a: np.ndarray, tol: float = SYMMETRY_TOL) -> np.ndarray:
    a = np.asarray(a, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    if a.size and np.max(np.abs(a - a.T)) > tol:
        raise ValueError("matrix is not symmetric")
    return a


def symmetric_eigen(a: np.ndarray, certify: bool = True) -> list[EigenPair]:
    """All eigenpairs of a real symmetric matrix, eigenvalues ascending.

    With ``certify`` the decomposition is checked against
    ``||A - V diag(w) V^T||_F <= 1e-8 max(1, ||A||_F)`` and pairwise
    orthonormality; a failure raises :class:`ConsistencyError`.
    """
    a = check_symmetric(a)
    if a.shape[0] == 0:
        return []
    w, v = np.linalg.eigh(a)
    scale = _frobenius_scale(a)
    residuals = np.linalg.norm(a @ v - v * w, axis=0)
    if certify:
        bound = SPECTRUM_TOL * scale
        recon = np.linalg.norm(a - (v * w) @ v.T)
        ortho = np.max(np.abs(v.T @ v - np.eye(len(w))))
        if recon > bound or ortho > SPECTRUM_TOL or np.max(residuals) > bound:
            raise ConsistencyError(
                f"eigendecomposition failed certification (recon={recon:.3g}, ortho={ortho:.3g})"
            )
    return [EigenPair(float(w[i]), v[:, i].copy(), float(residuals[i])) for i in range(len(w))]


def eigenvalues(a: np.ndarray) -> np.ndarray:
    """Ascending eigenvalues of a symmetric matrix (no certification)."""
    a = check_symmetric(a)
    if a.shape[0] == 0:
        return np.zeros(0)
    return np.linalg.eigvalsh(a)


def spectrum(a: np.ndarray, tolerance: float = SPECTRUM_TOL) -> SpectralMultiset:
    return SpectralMultiset((p.value for p in symmetric_eigen(a)), tolerance)


def laplacian_spectrum(g: Graph, tolerance: float = SPECTRUM_TOL) -> SpectralMultiset:
    return spectrum(laplacian(g), tolerance)


def adjacency_spectrum(g: Graph, tolerance: float = SPECTRUM_TOL) -> SpectralMultiset:
    return spectrum(adjacency_matrix(g), tolerance)


def signless_laplacian_spectrum(g: Graph, tolerance: float = SPECTRUM_TOL) -> SpectralMultiset:
    return spectrum(signless_laplacian(g), tolerance)


def _sorted(s: SpectrumLike) -> np.ndarray:
    return np.sort(np.asarray(list(s), dtype=float))


def max_abs_difference(s1: SpectrumLike, s2: SpectrumLike) -> float:
    """Largest gap between sorted spectra; ``inf`` on a length mismatch."""
    x, y = _sorted(s1), _sorted(s2)
    if len(x) != len(y):
        return float("inf")
    if len(x) == 0:
        return 0.0
    return float(np.max(np.abs(x - y)))


def spectra_equal(s1: SpectrumLike, s2: SpectrumLike, tol: float = SPECTRUM_TOL) -> bool:
    return max_abs_difference(s1, s2) <= tol


def zero_multiplicity(s: SpectrumLike, tol: float = SPECTRUM_TOL) -> int:
    return int(np.sum(np.abs(_sorted(s)) <= tol))

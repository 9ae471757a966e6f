"""Dense symmetric eigendecomposition and the spectrum-derived graph
quantities: positive/negative square energies, the PSD split of the adjacency
matrix, inertia, and the spectral triangle count.

Conventions. Eigenvalues are sorted descending. ``numeric_tolerance(n)`` is
the global absolute tolerance ``1e-8 * max(1, n)`` used by downstream
certificates; eigenvalues within ``zero_tolerance`` (default ``1e-8 * n``) of
zero are counted as zero and contribute to neither square energy.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ContractViolation, NumericError
from .graphs import Graph

SYMMETRY_TOL = 1e-12
RESIDUAL_SCALE = 1e-10


def numeric_tolerance(n: int) -> float:
    """Global absolute tolerance for spectral quantities on n vertices."""
    return 1e-8 * max(1, n)


def default_zero_tolerance(n: int) -> float:
    """Default half-width of the zero-eigenvalue band."""
    return 1e-8 * n


@dataclass(frozen=True)
class Spectrum:
    """Eigenvalues sorted descending plus the solver residual bound
    max_i ||A v_i - lambda_i v_i||_2."""

    values: tuple[float, ...]
    residual_bound: float

    @property
    def n(self) -> int:
        return len(self.values)


@dataclass(frozen=True, eq=False)
class SpectralSplit:
    """PSD pair with a_plus - a_minus equal to the adjacency matrix and
    <a_plus, a_minus> = 0."""

    a_plus: np.ndarray
    a_minus: np.ndarray


@dataclass(frozen=True)
class EnergyReport:
    s_plus: float
    s_minus: float
    energy: float
    m: int


@dataclass(frozen=True)
class Inertia:
    n_plus: int
    n_zero: int
    n_minus: int
    zero_tolerance: float


def eigen_decompose_symmetric(mat: np.ndarray) -> tuple[Spectrum, np.ndarray]:
    """Full eigendecomposition of a real symmetric matrix.

    Returns the spectrum (descending) and the matching orthonormal
    eigenvectors as columns. Raises ContractViolation for non-symmetric input
    and NumericError if the solver fails or the residual exceeds
    ``1e-10 * max(1, ||mat||_F)``.
    """
    mat = np.asarray(mat, dtype=np.float64)
    if mat.ndim != 2 or mat.shape[0] != mat.shape[1]:
        raise ContractViolation(f"expected a square matrix, got shape {mat.shape}")
    n = mat.shape[0]
    if n == 0:
        return Spectrum((), 0.0), np.zeros((0, 0))
    if np.max(np.abs(mat - mat.T)) > SYMMETRY_TOL:
        raise ContractViolation("matrix is not symmetric within 1e-12")
    try:
        vals, vecs = np.linalg.eigh(mat)
    except np.linalg.LinAlgError as exc:
        raise NumericError(f"eigendecomposition failed for {n}x{n} matrix") from exc
    vals = vals[::-1]
    vecs = vecs[:, ::-1]
    residual = float(np.max(np.linalg.norm(mat @ vecs - vecs * vals, axis=0)))
    bound = RESIDUAL_SCALE * max(1.0, float(np.linalg.norm(mat)))
    if residual > bound:
        raise NumericError(
            f"residual {residual:.3e} exceeds contract {bound:.3e} for {n}x{n} matrix"
        )
    return Spectrum(tuple(float(v) for v in vals), residual), vecs


def spectrum(g: Graph) -> Spectrum:
    """Adjacency spectrum of a graph, sorted descending."""
    spec, _ = eigen_decompose_symmetric(g.adjacency_matrix())
    tau = numeric_tolerance(g.n)
    values = np.array(spec.values)
    if values.size and abs(float(values.sum())) > tau:
        raise NumericError("adjacency spectrum trace deviates from zero")
    if abs(float(np.square(values).sum()) - 2.0 * g.m) > tau * max(1.0, 2.0 * g.m):
        raise NumericError("adjacency spectrum square-sum deviates from 2m")
    return spec


def square_energies(g: Graph, zero_tolerance: float | None = None) -> EnergyReport:
    """Sum of squared positive / negative adjacency eigenvalues.

    Eigenvalues with |lambda| <= zero_tolerance count as zero and contribute
    to neither sum.
    """
    if zero_tolerance is None:
        zero_tolerance = default_zero_tolerance(g.n)
    values = np.array(spectrum(g).values)
    if values.size == 0:
        return EnergyReport(0.0, 0.0, 0.0, 0)
    s_plus = float(np.square(values[values > zero_tolerance]).sum())
    s_minus = float(np.square(values[values < -zero_tolerance]).sum())
    return EnergyReport(s_plus, s_minus, float(np.abs(values).sum()), g.m)


def spectral_split(g: Graph, zero_tolerance: float | None = None) -> SpectralSplit:
    """PSD matrices built from the positive / negative spectral projectors."""
    if zero_tolerance is None:
        zero_tolerance = default_zero_tolerance(g.n)
    spec, vecs = eigen_decompose_symmetric(g.adjacency_matrix())
    values = np.array(spec.values)
    plus = values > zero_tolerance
    minus = values < -zero_tolerance
    a_plus = (vecs[:, plus] * values[plus]) @ vecs[:, plus].T
    a_minus = (vecs[:, minus] * (-values[minus])) @ vecs[:, minus].T
    a_plus = (a_plus + a_plus.T) / 2.0
    a_minus = (a_minus + a_minus.T) / 2.0
    tau = numeric_tolerance(g.n)
    for name, mat in (("a_plus", a_plus), ("a_minus", a_minus)):
        if mat.size and float(np.linalg.eigvalsh(mat)[0]) < -tau:
            raise NumericError(f"{name} is not PSD within tolerance")
    if np.max(np.abs(a_plus - a_minus - g.adjacency_matrix()), initial=0.0) > tau:
        raise NumericError("split does not reconstruct the adjacency matrix")
    return SpectralSplit(a_plus, a_minus)


def inertia(s: Spectrum, zero_tolerance: float | None = None) -> Inertia:
    """Counts of positive / zero / negative eigenvalues with a zero band."""
    if zero_tolerance is None:
        zero_tolerance = default_zero_tolerance(s.n)
    if zero_tolerance < s.residual_bound:
        raise ContractViolation(
            f"zero_tolerance {zero_tolerance:.3e} below solver residual "
            f"{s.residual_bound:.3e}"
        )
    values = np.array(s.values)
    n_plus = int((values > zero_tolerance).sum())
    n_minus = int((values < -zero_tolerance).sum())
    return Inertia(n_plus, s.n - n_plus - n_minus, n_minus, zero_tolerance)


def graph_inertia(g: Graph, zero_tolerance: float | None = None) -> Inertia:
    return inertia(spectrum(g), zero_tolerance)


def triangle_count_spectral(s: Spectrum) -> float:
    """One sixth of the third spectral moment; equals the triangle count for
    graph spectra."""
    return float(np.sum(np.power(np.array(s.values), 3))) / 6.0

"""Semidefinite characterizations of the square energies and their numeric
witnesses.

The positive square energy is the minimum of ||A + M||_F^2 over PSD M
(attained at M = A-), and symmetrically s- minimizes ||A - M||_F^2 at
M = A+. The dual view writes s+/s- as a Rayleigh-style maximum of
max(+-<A, M>, 0)^2 / <M, M> over nonzero PSD M. This module verifies both
characterizations numerically, runs an independent projected-gradient
minimizer, scans the quartic inequality behind the 3x3 PSD row-sum bound,
and produces vertex-removal witnesses with square-energy drop > 1 on induced
3-vertex paths.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

import numpy as np

from .errors import ContractViolation, ConvergenceError, NumericError
from .graphs import Graph, delete_vertex
from .oracles import induces_p3
from .spectral import (
    eigen_decompose_symmetric,
    numeric_tolerance,
    spectral_split,
    square_energies,
)

Sign = Literal["plus", "minus"]

# Strictness margin for the "drop exceeds 1" removal witness.
REMOVAL_STRICTNESS = 1e-9

_P3_ADJACENCY = np.array(
    [[0.0, 1.0, 0.0], [1.0, 0.0, 1.0], [0.0, 1.0, 0.0]]
)


def _check_sign(sign: str) -> None:
    if sign not in ("plus", "minus"):
        raise ContractViolation(f"sign must be 'plus' or 'minus', got {sign!r}")


@dataclass(frozen=True, eq=False)
class PsdWitness:
    """A symmetric matrix certified PSD within the global tolerance."""

    mat: np.ndarray
    min_eigenvalue: float

    @classmethod
    def from_matrix(cls, mat: np.ndarray) -> "PsdWitness":
        spec, _ = eigen_decompose_symmetric(np.asarray(mat, dtype=np.float64))
        lo = spec.values[-1] if spec.values else 0.0
        if lo < -numeric_tolerance(spec.n):
            raise ContractViolation(f"matrix is not PSD: min eigenvalue {lo:.3e}")
        return cls(np.asarray(mat, dtype=np.float64), float(lo))


def random_psd(rng: np.random.Generator, n: int) -> np.ndarray:
    """Gram matrix F^T F of an n-by-n standard normal factor."""
    f = rng.standard_normal((n, n))
    m = f.T @ f
    return (m + m.T) / 2.0


def row_col_square_sum(mat: np.ndarray, i: int) -> float:
    """Sum of squared entries on row i or column i; (i, j) and (j, i) both
    count, (i, i) once."""
    mat = np.asarray(mat, dtype=np.float64)
    if not 0 <= i < mat.shape[0]:
        raise ContractViolation(f"index {i} out of range for shape {mat.shape}")
    return float(
        np.square(mat[i, :]).sum() + np.square(mat[:, i]).sum() - mat[i, i] ** 2
    )


@dataclass(frozen=True)
class MinCharacterizationViolation:
    trial: int
    sign: str
    objective: float
    optimum: float
    matrix: tuple[tuple[float, ...], ...]


@dataclass(frozen=True)
class MinCharacterizationReport:
    s_plus: float
    s_minus: float
    split_plus_objective: float
    split_minus_objective: float
    equality_gap: float
    trials: int
    violations: tuple[MinCharacterizationViolation, ...]
    ok: bool


def verify_min_characterization(
    g: Graph, trials: int = 20, seed: int = 0
) -> MinCharacterizationReport:
    """Check both sides of the PSD minimization form of s+/s-.

    Equality: ||A + A-||^2 = s+ and ||A - A+||^2 = s-. Lower bound: for
    seeded random PSD M, ||A + M||^2 >= s+ and ||A - M||^2 >= s- up to the
    global tolerance. Violations carry the offending matrix.
    """
    a = g.adjacency_matrix()
    report = square_energies(g)
    split = spectral_split(g)
    obj_plus = float(np.square(a + split.a_minus).sum())
    obj_minus = float(np.square(a - split.a_plus).sum())
    gap = max(abs(obj_plus - report.s_plus), abs(obj_minus - report.s_minus))
    tau = numeric_tolerance(g.n)
    rng = np.random.default_rng(seed)
    violations: list[MinCharacterizationViolation] = []
    for t in range(trials):
        m = random_psd(rng, g.n)
        for sign, target in (("plus", report.s_plus), ("minus", report.s_minus)):
            obj = float(np.square(a + m if sign == "plus" else a - m).sum())
            if obj < target - tau:
                violations.append(
                    MinCharacterizationViolation(
                        t, sign, obj, target, tuple(map(tuple, m.tolist()))
                    )
                )
    return MinCharacterizationReport(
        report.s_plus,
        report.s_minus,
        obj_plus,
        obj_minus,
        gap,
        trials,
        tuple(violations),
        gap <= tau and not violations,
    )


def _psd_projection(mat: np.ndarray) -> np.ndarray:
    spec, vecs = eigen_decompose_symmetric(mat)
    vals = np.maximum(np.array(spec.values), 0.0)
    out = (vecs * vals) @ vecs.T
    return (out + out.T) / 2.0


def projected_gradient_min(
    g: Graph,
    sign: Sign,
    max_iters: int = 10000,
    tol: float | None = None,
    step: float = 0.5,
) -> float:
    """Minimize ||A +- M||_F^2 over the PSD cone by gradient steps followed by
    projection (eigenvalue clamping); an oracle for the square energies that
    never reads them.

    Stops when the objective change drops below ``tol`` (default
    ``1e-4 * max(1, 2m)``); raises ConvergenceError with the objective tail if
    the iteration budget runs out first.
    """
    _check_sign(sign)
    if tol is None:
        tol = 1e-4 * max(1.0, 2.0 * g.m)
    a = g.adjacency_matrix()
    sgn = 1.0 if sign == "plus" else -1.0

    def objective(mat: np.ndarray) -> float:
        return float(np.square(a + sgn * mat).sum())

    m = np.zeros_like(a)
    prev = objective(m)
    tail: list[float] = [prev]
    for _ in range(max_iters):
        grad = 2.0 * sgn * (a + sgn * m)
        m = _psd_projection(m - step * grad)
        obj = objective(m)
        tail.append(obj)
        if abs(obj - prev) <= tol:
            return obj
        prev = obj
    raise ConvergenceError(
        f"projected gradient did not stabilize within {max_iters} iterations",
        tuple(tail[-10:]),
    )


def rayleigh_max_value(g: Graph, w: PsdWitness, sign: Sign) -> float:
    """Objective max(+-<A, M>, 0)^2 / <M, M> of the maximization form; never
    exceeds the corresponding square energy, with equality at the matching
    split half."""
    _check_sign(sign)
    mat = w.mat
    denom = float(np.square(mat).sum())
    if denom == 0.0:
        raise ContractViolation("witness matrix must be nonzero")
    ip = float((g.adjacency_matrix() * mat).sum())
    if sign == "minus":
        ip = -ip
    return max(ip, 0.0) ** 2 / denom


@dataclass(frozen=True)
class P3PsdTrialViolation:
    trial: int
    side: str
    max_row_col_sum: float
    matrix: tuple[tuple[float, ...], ...]


@dataclass(frozen=True)
class P3PsdScanReport:
    grid_step: float
    grid_min: float
    grid_argmin: float
    grid_ok: bool
    trials: int
    violations: tuple[P3PsdTrialViolation, ...]
    ok: bool


def p3_psd_margin(x: np.ndarray) -> np.ndarray:
    """The quartic margin 16x^4 - 6(1 - 4(1-x)^2)(1 - 2(1-x)^2)."""
    d = 1.0 - x
    return 16.0 * x**4 - 6.0 * (1.0 - 4.0 * d**2) * (1.0 - 2.0 * d**2)


def scan_p3_psd_inequality(
    grid_step: float, random_trials: int, seed: int
) -> P3PsdScanReport:
    """Certify the numeric core behind the 3x3 PSD row-sum bound.

    Scans 16x^4 - 6(1 - 4(1-x)^2)(1 - 2(1-x)^2) over x in [0.5, 1]; the grid
    minimum must stay >= 0.5. Additionally, for seeded random PSD 3x3
    matrices M, some row/column square sum of A - M and of A + M (A the
    3-path adjacency matrix) must exceed 1.
    """
    if grid_step > 1e-3:
        raise ContractViolation(f"grid_step must be <= 1e-3, got {grid_step}")
    steps = round(0.5 / grid_step)
    xs = np.linspace(0.5, 1.0, steps + 1)
    margins = p3_psd_margin(xs)
    idx = int(np.argmin(margins))
    grid_min = float(margins[idx])
    rng = np.random.default_rng(seed)
    violations: list[P3PsdTrialViolation] = []
    for t in range(random_trials):
        m = random_psd(rng, 3)
        for side, mat in (("minus", _P3_ADJACENCY - m), ("plus", _P3_ADJACENCY + m)):
            best = max(row_col_square_sum(mat, i) for i in range(3))
            if not best > 1.0:
                violations.append(
                    P3PsdTrialViolation(t, side, best, tuple(map(tuple, m.tolist())))
                )
    grid_ok = grid_min >= 0.5
    return P3PsdScanReport(
        grid_step,
        grid_min,
        float(xs[idx]),
        grid_ok,
        random_trials,
        tuple(violations),
        grid_ok and not violations,
    )


@dataclass(frozen=True)
class P3RemovalWitness:
    """Vertices of an induced 3-path whose removal drops s- (resp. s+) by
    more than 1, with the achieved drops."""

    vertex_minus: int
    drop_minus: float
    vertex_plus: int
    drop_plus: float


def p3_removal_witness(g: Graph, triple: tuple[int, int, int]) -> P3RemovalWitness:
    """Search the three vertices of an induced 3-path for removal witnesses.

    For each sign independently, returns the vertex maximizing the square
    energy drop (ties to the least index); the drop must exceed 1 by at least
    a strictness margin, which the removal bound guarantees.
    """
    if not induces_p3(g, triple):
        raise ContractViolation(f"triple {triple} does not induce a 3-vertex path")
    whole = square_energies(g)
    drops_plus = []
    drops_minus = []
    for u in triple:
        rest = square_energies(delete_vertex(g, u))
        drops_plus.append((whole.s_plus - rest.s_plus, u))
        drops_minus.append((whole.s_minus - rest.s_minus, u))

    def best(drops: list[tuple[float, int]], label: str) -> tuple[int, float]:
        drop, vertex = max(drops, key=lambda t: (t[0], -t[1]))
        if drop < 1.0 + REMOVAL_STRICTNESS:
            raise NumericError(
                f"no removal vertex with s_{label} drop > 1 in {triple}; "
                f"drops {[round(d, 6) for d, _ in drops]}"
            )
        return vertex, drop

    v_minus, d_minus = best(drops_minus, "minus")
    v_plus, d_plus = best(drops_plus, "plus")
    return P3RemovalWitness(v_minus, d_minus, v_plus, d_plus)

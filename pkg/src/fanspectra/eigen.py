"""Dense symmetric eigensolver (cyclic Jacobi) and multiplicity grouping.

This is the numeric oracle the closed-form spectra are checked against,
so it deliberately does not delegate to an external eigensolver.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

DEFAULT_CONVERGENCE_TOL = 1e-12
DEFAULT_GROUPING_TOL = 1e-6
SWEEP_CAP = 100


class JacobiConvergenceError(RuntimeError):
    """Raised when the rotation sweeps fail to reach the requested tolerance."""


@dataclass(frozen=True)
class Spectrum:
    """Eigenvalue multiset: ascending (value, multiplicity) pairs."""

    pairs: tuple[tuple[float, int], ...]
    grouping_tol: float = DEFAULT_GROUPING_TOL

    @property
    def order(self) -> int:
        return sum(k for _, k in self.pairs)

    def expanded(self) -> list[float]:
        return [v for v, k in self.pairs for _ in range(k)]

    def values(self) -> list[float]:
        return [v for v, _ in self.pairs]


def _off_norm(a: np.ndarray) -> float:
    # summed over the strict upper triangle only: subtracting the diagonal
    # from the full Frobenius norm cancels catastrophically near convergence
    upper = np.triu(a, 1)
    return math.sqrt(2.0 * float(np.sum(upper * upper)))


def symmetric_eigenvalues(
    matrix: np.ndarray,
    convergence_tol: float = DEFAULT_CONVERGENCE_TOL,
    sweep_cap: int = SWEEP_CAP,
) -> np.ndarray:
    """All eigenvalues of a real symmetric matrix, ascending.

    Runs cyclic Jacobi rotations until the off-diagonal Frobenius norm
    drops below convergence_tol times its initial value (or vanishes).
    Raises JacobiConvergenceError with diagnostics if sweep_cap sweeps
    do not get there, and ValueError for non-symmetric or non-finite
    input.
    """
    a = np.asarray(matrix, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    if a.size and not np.all(np.isfinite(a)):
        raise ValueError("matrix entries must be finite")
    if convergence_tol <= 0.0:
        raise ValueError("convergence_tol must be positive")
    if sweep_cap < 1:
        raise ValueError("sweep_cap must be at least 1")
    n = a.shape[0]
    if n == 0:
        return np.empty(0)
    scale = float(np.max(np.abs(a)))
    if float(np.max(np.abs(a - a.T))) > 1e-10 * max(1.0, scale):
        raise ValueError("matrix is not symmetric")
    if n == 1:
        return a.diagonal().copy()

    a = (a + a.T) / 2.0  # exact symmetry; also takes a private copy
    initial = _off_norm(a)
    if initial == 0.0:
        return np.sort(a.diagonal())
    target = convergence_tol * initial

    for sweep in range(1, sweep_cap + 1):
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                app = a[p, p]
                aqq = a[q, q]
                g = 100.0 * abs(apq)
                # late sweeps: annihilate entries that no longer move the diagonal
                if sweep > 4 and abs(app) + g == abs(app) and abs(aqq) + g == abs(aqq):
                    a[p, q] = 0.0
                    a[q, p] = 0.0
                    continue
                theta = 0.5 * (aqq - app) / apq
                if abs(theta) > 1e150:
                    t = 0.5 / theta
                else:
                    t = 1.0 / (abs(theta) + math.sqrt(1.0 + theta * theta))
                    if theta < 0.0:
                        t = -t
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = t * c
                tau = s / (1.0 + c)
                col_p = a[:, p].copy()
                col_q = a[:, q].copy()
                a[:, p] = col_p - s * (col_q + tau * col_p)
                a[:, q] = col_q + s * (col_p - tau * col_q)
                a[p, p] = app - t * apq
                a[q, q] = aqq + t * apq
                a[p, q] = 0.0
                a[q, p] = 0.0
                a[p, :] = a[:, p]
                a[q, :] = a[:, q]
        remaining = _off_norm(a)
        if remaining <= target:
            return np.sort(a.diagonal())
    raise JacobiConvergenceError(
        f"no convergence after {sweep_cap} sweeps: off-diagonal norm {remaining:.3e}, "
        f"target {target:.3e} (initial {initial:.3e})"
    )


def group_multiplicities(values, grouping_tol: float = DEFAULT_GROUPING_TOL) -> Spectrum:
    """Merge ascending values whose consecutive gaps are within grouping_tol.

    The representative of each group is its arithmetic mean.
    """
    vals = [float(v) for v in values]
    if any(not math.isfinite(v) for v in vals):
        raise ValueError("values must be finite")
    if any(b < a for a, b in zip(vals, vals[1:])):
        raise ValueError("values must be sorted ascending")
    pairs: list[tuple[float, int]] = []
    group: list[float] = []
    for v in vals:
        if group and v - group[-1] > grouping_tol:
            pairs.append((sum(group) / len(group), len(group)))
            group = []
        group.append(v)
    if group:
        pairs.append((sum(group) / len(group), len(group)))
    return Spectrum(tuple(pairs), grouping_tol)

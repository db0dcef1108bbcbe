"""Vertex partitions, quotient matrices, and equitable-partition spectra.

The quotient of a matrix M under an ordered partition averages each
block row: b[i][j] = (sum of the entries of block M_ij) / |block i|.
A partition is equitable when every row inside a block has the same sum
toward every other block; then the quotient's eigenvalues are a subset
of M's.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .eigen import DEFAULT_GROUPING_TOL, Spectrum, group_multiplicities, symmetric_eigenvalues

DEFAULT_EQUITABLE_TOL = 1e-9


class NotEquitableError(ValueError):
    """Raised when a quotient-spectrum request gets a non-equitable partition."""


@dataclass(frozen=True)
class Partition:
    """Ordered list of disjoint vertex blocks covering 0..order-1."""

    blocks: tuple[tuple[int, ...], ...]

    @property
    def block_sizes(self) -> tuple[int, ...]:
        return tuple(len(b) for b in self.blocks)

    def validate_for(self, order: int) -> None:
        seen: set[int] = set()
        for block in self.blocks:
            if not block:
                raise ValueError("partition blocks must be nonempty")
            for v in block:
                if not 0 <= v < order:
                    raise ValueError(f"vertex {v} out of range for order {order}")
                if v in seen:
                    raise ValueError(f"vertex {v} appears in more than one block")
                seen.add(v)
        if len(seen) != order:
            raise ValueError("partition must cover every vertex exactly once")


@dataclass(frozen=True)
class QuotientMatrix:
    """Block-averaged matrix together with the sizes of the blocks it came from."""

    matrix: np.ndarray
    block_sizes: tuple[int, ...]

    @property
    def order(self) -> int:
        return len(self.block_sizes)


def make_partition(blocks) -> Partition:
    return Partition(tuple(tuple(int(v) for v in block) for block in blocks))


def side_partition(n1: int, n2: int) -> Partition:
    """Two blocks: the first n1 indices, then the next n2."""
    return make_partition([range(n1), range(n1, n1 + n2)])


def fan_partition(m: int, n: int) -> Partition:
    """Path block then hub block, matching the fan's vertex ordering."""
    return side_partition(n, m)


def nc_partition(m: int, n: int) -> Partition:
    """Four blocks: first path, first hubs, second hubs, second path."""
    return make_partition(
        [range(n), range(n, n + m), range(n + m, n + 2 * m), range(n + 2 * m, 2 * n + 2 * m)]
    )


def _block_sums(matrix: np.ndarray, partition: Partition) -> np.ndarray:
    t = len(partition.blocks)
    sums = np.zeros((t, t))
    for i, bi in enumerate(partition.blocks):
        rows = matrix[np.array(bi)]
        for j, bj in enumerate(partition.blocks):
            sums[i, j] = float(rows[:, np.array(bj)].sum())
    return sums


def quotient_matrix(matrix: np.ndarray, partition: Partition) -> QuotientMatrix:
    matrix = np.asarray(matrix, dtype=float)
    partition.validate_for(matrix.shape[0])
    sums = _block_sums(matrix, partition)
    sizes = partition.block_sizes
    b = sums / np.array(sizes, dtype=float)[:, None]
    return QuotientMatrix(b, sizes)


def is_equitable(matrix: np.ndarray, partition: Partition, tol: float = DEFAULT_EQUITABLE_TOL) -> bool:
    """True iff within every block pair all row sums agree to within tol."""
    matrix = np.asarray(matrix, dtype=float)
    partition.validate_for(matrix.shape[0])
    for bi in partition.blocks:
        rows = matrix[np.array(bi)]
        for bj in partition.blocks:
            row_sums = rows[:, np.array(bj)].sum(axis=1)
            if float(row_sums.max() - row_sums.min()) > tol:
                return False
    return True


def quotient_eigenvalues(
    matrix: np.ndarray,
    partition: Partition,
    equitable_tol: float = DEFAULT_EQUITABLE_TOL,
    grouping_tol: float = DEFAULT_GROUPING_TOL,
) -> Spectrum:
    """Eigenvalues of the quotient of a symmetric matrix under an equitable partition.

    The quotient B is not symmetric in general, but for an equitable
    partition of a symmetric matrix it is diagonally similar to the
    symmetric matrix C with c[i][j] = blocksum(i, j) / sqrt(|b_i| |b_j|)
    (conjugate by diag(sqrt(|b_i|))).  C is built directly from the
    upper triangle so it is exactly symmetric, then handed to the Jacobi
    solver.
    """
    matrix = np.asarray(matrix, dtype=float)
    if not is_equitable(matrix, partition, tol=equitable_tol):
        raise NotEquitableError("partition is not equitable for this matrix")
    sums = _block_sums(matrix, partition)
    sizes = partition.block_sizes
    t = len(sizes)
    c = np.zeros((t, t))
    for i in range(t):
        for j in range(i, t):
            value = sums[i, j] / math.sqrt(sizes[i] * sizes[j])
            c[i, j] = value
            c[j, i] = value
    return group_multiplicities(symmetric_eigenvalues(c), grouping_tol=grouping_tol)

"""Dense symmetric matrix builders for a graph.

Seven kinds are supported: adjacency A, Laplacian L = Deg - A, distance
D (all-pairs hop counts), transmission Tr (diagonal matrix of the row
sums of D), distance Laplacian Tr - D, distance signless Laplacian
Tr + D, and the blend t*Tr + (1-t)*D for 0 < t < 1.

Every builder returns a fresh float64 array that is symmetric by
construction.  The distance family is defined only for connected graphs
and raises DisconnectedGraphError otherwise.  Distances come from one
BFS per source vertex, so building D costs O(V * (V + E)).
"""

from __future__ import annotations

from enum import Enum

import numpy as np

from .graphs import DisconnectedGraphError, Graph, UNREACHABLE, _bfs, adjacency_lists, degree_sequence


class MatrixKind(str, Enum):
    ADJACENCY = "adjacency"
    LAPLACIAN = "laplacian"
    DISTANCE = "distance"
    TRANSMISSION = "transmission"
    DISTANCE_LAPLACIAN = "distance-laplacian"
    DISTANCE_SIGNLESS_LAPLACIAN = "distance-signless-laplacian"
    GENERALIZED_DISTANCE = "generalized-distance"


def adjacency_matrix(g: Graph) -> np.ndarray:
    a = np.zeros((g.vertex_count, g.vertex_count))
    for u, v in g.edges:
        a[u, v] = 1.0
        a[v, u] = 1.0
    return a


def laplacian_matrix(g: Graph) -> np.ndarray:
    lap = -adjacency_matrix(g)
    degrees = degree_sequence(g)
    for v in range(g.vertex_count):
        lap[v, v] = float(degrees[v])
    return lap


def distance_matrix(g: Graph) -> np.ndarray:
    d = np.zeros((g.vertex_count, g.vertex_count))
    adj = adjacency_lists(g)
    for source in range(g.vertex_count):
        row = _bfs(adj, source)
        if UNREACHABLE in row:
            raise DisconnectedGraphError("distance matrix is undefined for a disconnected graph")
        d[source] = row
    return d


def transmission_vector(g: Graph) -> np.ndarray:
    """Per-vertex sum of distances to every other vertex."""
    return distance_matrix(g).sum(axis=1)


def transmission_matrix(g: Graph) -> np.ndarray:
    return np.diag(transmission_vector(g))


def distance_laplacian(g: Graph) -> np.ndarray:
    d = distance_matrix(g)
    return np.diag(d.sum(axis=1)) - d


def distance_signless_laplacian(g: Graph) -> np.ndarray:
    d = distance_matrix(g)
    return np.diag(d.sum(axis=1)) + d


def generalized_distance(g: Graph, t: float) -> np.ndarray:
    """t*Tr + (1-t)*D; t must lie strictly between 0 and 1."""
    if not 0.0 < t < 1.0:
        raise ValueError(f"blend parameter t={t} must satisfy 0 < t < 1")
    d = distance_matrix(g)
    return t * np.diag(d.sum(axis=1)) + (1.0 - t) * d


def build_matrix(g: Graph, kind: MatrixKind | str, t: float | None = None) -> np.ndarray:
    """Dispatch a builder by kind; t is consumed only by generalized-distance."""
    kind = MatrixKind(kind)
    if kind is MatrixKind.GENERALIZED_DISTANCE:
        if t is None:
            raise ValueError("generalized-distance requires the blend parameter t")
        return generalized_distance(g, t)
    builder = {
        MatrixKind.ADJACENCY: adjacency_matrix,
        MatrixKind.LAPLACIAN: laplacian_matrix,
        MatrixKind.DISTANCE: distance_matrix,
        MatrixKind.TRANSMISSION: transmission_matrix,
        MatrixKind.DISTANCE_LAPLACIAN: distance_laplacian,
        MatrixKind.DISTANCE_SIGNLESS_LAPLACIAN: distance_signless_laplacian,
    }[kind]
    return builder(g)

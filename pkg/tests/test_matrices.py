"""Matrix builder tests, including the distance-family structure checks."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fanspectra.graphs import (
    DisconnectedGraphError,
    degree_sequence,
    generalized_fan,
    join,
    nc_graph,
    null_graph,
    path_graph,
)
from fanspectra.matrices import (
    MatrixKind,
    adjacency_matrix,
    build_matrix,
    distance_laplacian,
    distance_matrix,
    distance_signless_laplacian,
    generalized_distance,
    laplacian_matrix,
    transmission_matrix,
    transmission_vector,
)
from fanspectra.verify import random_graph

K2 = path_graph(2)


def floyd_warshall(graph):
    """Independent all-pairs oracle (different algorithm from the builder's BFS)."""
    n = graph.vertex_count
    big = float("inf")
    d = np.full((n, n), big)
    np.fill_diagonal(d, 0.0)
    for u, v in graph.edges:
        d[u, v] = d[v, u] = 1.0
    for k in range(n):
        d = np.minimum(d, d[:, [k]] + d[[k], :])
    return d


class TestAdjacencyAndLaplacian:
    def test_adjacency_of_an_edge(self):
        assert np.array_equal(adjacency_matrix(K2), [[0, 1], [1, 0]])

    def test_laplacian_of_an_edge(self):
        assert np.array_equal(laplacian_matrix(K2), [[1, -1], [-1, 1]])

    def test_fan_2_2_adjacency_is_complete_minus_one_edge(self):
        expected = np.ones((4, 4)) - np.eye(4)
        expected[2, 3] = expected[3, 2] = 0.0
        assert np.array_equal(adjacency_matrix(generalized_fan(2, 2)), expected)

    def test_adjacency_row_sums_are_degrees(self):
        g = nc_graph(3, 4)
        assert np.array_equal(adjacency_matrix(g).sum(axis=1), degree_sequence(g))

    def test_laplacian_trace_is_degree_sum(self):
        g = generalized_fan(3, 4)
        assert np.trace(laplacian_matrix(g)) == 2 * g.edge_count == 30

    def test_null_graph_laplacian_is_zero(self):
        assert not laplacian_matrix(null_graph(4)).any()

    @given(m=st.integers(1, 6), n=st.integers(1, 6))
    def test_laplacian_rows_sum_to_zero(self, m, n):
        lap = laplacian_matrix(generalized_fan(m, n))
        assert np.array_equal(lap.sum(axis=1), np.zeros(m + n))


class TestDistanceFamily:
    def test_path_distance_matrix(self):
        assert np.array_equal(distance_matrix(path_graph(3)), [[0, 1, 2], [1, 0, 1], [2, 1, 0]])

    def test_disconnected_is_an_error(self):
        for op in (distance_matrix, transmission_vector, distance_laplacian,
                   distance_signless_laplacian):
            with pytest.raises(DisconnectedGraphError):
                op(null_graph(2))

    def test_nc_block_pattern(self):
        m, n = 3, 4
        d = distance_matrix(nc_graph(m, n))
        hubs1 = slice(n, n + m)
        hubs2 = slice(n + m, n + 2 * m)
        path2 = slice(n + 2 * m, 2 * n + 2 * m)
        cross_hub = 3.0 * np.ones((m, m)) - 2.0 * np.eye(m)
        assert np.array_equal(d[hubs1, hubs2], cross_hub)
        assert np.array_equal(d[:n, path2], np.full((n, n), 3.0))
        assert np.array_equal(d[hubs1, path2], np.full((m, n), 2.0))

    @given(seed=st.integers(0, 10_000))
    @settings(max_examples=40, deadline=None)
    def test_join_distances_are_at_most_two(self, seed):
        rng = np.random.default_rng(seed)
        g = join(random_graph(int(rng.integers(1, 7)), rng),
                 random_graph(int(rng.integers(1, 7)), rng))
        d = distance_matrix(g)
        assert set(np.unique(d)) <= {0.0, 1.0, 2.0}

    @given(m=st.integers(2, 5), n=st.integers(2, 5))
    @settings(max_examples=20, deadline=None)
    def test_distances_match_floyd_warshall(self, m, n):
        g = nc_graph(m, n)
        assert np.array_equal(distance_matrix(g), floyd_warshall(g))

    def test_triangle_inequality_and_zero_diagonal(self):
        d = distance_matrix(nc_graph(2, 3))
        n = d.shape[0]
        assert np.array_equal(np.diag(d), np.zeros(n))
        for k in range(n):
            assert np.all(d <= d[:, [k]] + d[[k], :] + 1e-12)


class TestTransmissionAndBlends:
    def test_path_transmissions(self):
        assert np.array_equal(transmission_vector(path_graph(3)), [3, 2, 3])

    def test_nc_2_2_transmissions(self):
        tr = transmission_vector(nc_graph(2, 2))
        assert list(tr) == [13, 13, 12, 12, 12, 12, 13, 13]

    def test_transmission_matrix_is_diagonal(self):
        t = transmission_matrix(path_graph(4))
        assert np.array_equal(t, np.diag(np.diag(t)))

    def test_edge_graph_matrices(self):
        assert np.array_equal(distance_laplacian(K2), [[1, -1], [-1, 1]])
        assert np.array_equal(distance_signless_laplacian(K2), [[1, 1], [1, 1]])
        assert np.array_equal(generalized_distance(K2, 0.5), [[0.5, 0.5], [0.5, 0.5]])

    def test_distance_laplacian_trace_nc_2_2(self):
        assert np.trace(distance_laplacian(nc_graph(2, 2))) == 100

    def test_distance_laplacian_rows_sum_to_zero(self):
        dl = distance_laplacian(nc_graph(3, 4))
        assert np.array_equal(dl.sum(axis=1), np.zeros(dl.shape[0]))

    def test_signless_minus_laplacian_is_twice_distance(self):
        g = generalized_fan(2, 5)
        delta = distance_signless_laplacian(g) - distance_laplacian(g)
        assert np.array_equal(delta, 2.0 * distance_matrix(g))

    @pytest.mark.parametrize("t", [0.25, 0.5, 0.9])
    def test_blend_is_exact_combination(self, t):
        g = generalized_fan(3, 3)
        expected = t * transmission_matrix(g) + (1 - t) * distance_matrix(g)
        assert np.array_equal(generalized_distance(g, t), expected)

    @pytest.mark.parametrize("t", [0.0, 1.0, -0.3, 1.5])
    def test_blend_parameter_validation(self, t):
        with pytest.raises(ValueError):
            generalized_distance(K2, t)


class TestDispatch:
    def test_build_matrix_covers_every_kind(self):
        g = generalized_fan(2, 3)
        for kind in MatrixKind:
            t = 0.5 if kind is MatrixKind.GENERALIZED_DISTANCE else None
            mat = build_matrix(g, kind, t=t)
            assert mat.shape == (5, 5)
            assert np.array_equal(mat, mat.T)

    def test_build_matrix_accepts_strings(self):
        g = path_graph(3)
        assert np.array_equal(build_matrix(g, "laplacian"), laplacian_matrix(g))

    def test_generalized_distance_requires_t(self):
        with pytest.raises(ValueError):
            build_matrix(path_graph(3), MatrixKind.GENERALIZED_DISTANCE)

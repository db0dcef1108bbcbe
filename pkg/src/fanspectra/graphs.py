"""Graph families with frozen vertex orderings.

All graphs are simple, undirected, and labeled by 0-based indices.  The
orderings below are part of the public contract: the matrix builders and
the canonical equitable partitions depend on them.

* ``path_graph(n)``: vertices 0..n-1 in path order.
* ``generalized_fan(m, n)``: the n path vertices first (0..n-1), then the
  m hub vertices (n..n+m-1).  Every hub is adjacent to every path vertex;
  hubs are pairwise non-adjacent.  Equal, as a labeled graph, to
  ``join(path_graph(n), null_graph(m))``.
* ``nc_graph(m, n)``: two generalized fans glued hub-to-hub.  Index
  layout: [0, n) first path, [n, n+m) first hubs, [n+m, n+2m) second
  hubs, [n+2m, 2n+2m) second path.  Hub i of the first copy is joined to
  hub i of the second copy.  Any perfect matching between the hub sets
  yields an isomorphic graph, so the identity matching is fixed as the
  canonical one.

Graphs are immutable after construction and all operations are pure, so
values can be shared freely across threads.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable

UNREACHABLE = -1


class DisconnectedGraphError(ValueError):
    """Raised when an operation that needs a connected graph gets one that is not."""


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph; every edge is a pair (u, v) with u < v."""

    vertex_count: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self) -> None:
        if self.vertex_count < 0:
            raise ValueError("vertex_count must be non-negative")
        for u, v in self.edges:
            if not (0 <= u < v < self.vertex_count):
                raise ValueError(
                    f"edge ({u}, {v}) is invalid for a graph on {self.vertex_count} vertices"
                )

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)


def make_graph(vertex_count: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a Graph from an iterable of endpoint pairs, normalizing their order."""
    normalized = set()
    for u, v in edges:
        if u == v:
            raise ValueError(f"self-loop at vertex {u}")
        normalized.add((u, v) if u < v else (v, u))
    return Graph(vertex_count, frozenset(normalized))


def null_graph(m: int) -> Graph:
    """Graph on m >= 1 vertices with no edges."""
    if m < 1:
        raise ValueError("null_graph requires m >= 1")
    return Graph(m, frozenset())


def path_graph(n: int) -> Graph:
    """Path on n >= 1 vertices, edges {i, i+1}."""
    if n < 1:
        raise ValueError("path_graph requires n >= 1")
    return make_graph(n, [(i, i + 1) for i in range(n - 1)])


def join(g1: Graph, g2: Graph) -> Graph:
    """Disjoint union (g1's vertices first) plus every cross edge."""
    if g1.vertex_count == 0 or g2.vertex_count == 0:
        raise ValueError("join requires two nonempty graphs")
    shift = g1.vertex_count
    edges = list(g1.edges)
    edges += [(u + shift, v + shift) for u, v in g2.edges]
    edges += [(u, v + shift) for u in range(g1.vertex_count) for v in range(g2.vertex_count)]
    return make_graph(shift + g2.vertex_count, edges)


def generalized_fan(m: int, n: int) -> Graph:
    """Fan with m hubs over an n-vertex path: path vertices 0..n-1, hubs n..n+m-1."""
    if m < 1 or n < 1:
        raise ValueError("generalized_fan requires m >= 1 and n >= 1")
    return join(path_graph(n), null_graph(m))


def nc_graph(m: int, n: int) -> Graph:
    """Two generalized fans with hub i of each copy joined to hub i of the other.

    Defined for m >= 2 and n >= 2 only; has 2(m+n) vertices and
    2(n-1+mn) + m edges.
    """
    if m < 2 or n < 2:
        raise ValueError("nc_graph requires m >= 2 and n >= 2")
    hubs1 = n
    hubs2 = n + m
    path2 = n + 2 * m
    edges: list[tuple[int, int]] = []
    for i in range(n - 1):
        edges.append((i, i + 1))
        edges.append((path2 + i, path2 + i + 1))
    for h in range(m):
        for p in range(n):
            edges.append((p, hubs1 + h))
            edges.append((hubs2 + h, path2 + p))
        edges.append((hubs1 + h, hubs2 + h))
    return make_graph(2 * (m + n), edges)


def adjacency_lists(g: Graph) -> list[list[int]]:
    """Sorted neighbor lists, one per vertex."""
    adj: list[list[int]] = [[] for _ in range(g.vertex_count)]
    for u, v in g.edges:
        adj[u].append(v)
        adj[v].append(u)
    for neighbors in adj:
        neighbors.sort()
    return adj


def _bfs(adj: list[list[int]], source: int) -> list[int]:
    dist = [UNREACHABLE] * len(adj)
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in adj[u]:
            if dist[w] == UNREACHABLE:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def bfs_distances(g: Graph, source: int) -> list[int]:
    """Hop distances from source; UNREACHABLE (-1) marks disconnected pairs."""
    if not (0 <= source < g.vertex_count):
        raise ValueError(f"source {source} out of range for {g.vertex_count} vertices")
    return _bfs(adjacency_lists(g), source)


def is_connected(g: Graph) -> bool:
    if g.vertex_count <= 1:
        return True
    return UNREACHABLE not in bfs_distances(g, 0)


def degree_sequence(g: Graph) -> list[int]:
    degrees = [0] * g.vertex_count
    for u, v in g.edges:
        degrees[u] += 1
        degrees[v] += 1
    return degrees


def to_edge_list(g: Graph) -> str:
    """One "u v" line per edge, ascending."""
    return "".join(f"{u} {v}\n" for u, v in g.sorted_edges())


def to_dot(g: Graph, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    lines += [f"  {v};" for v in range(g.vertex_count)]
    lines += [f"  {u} -- {v};" for u, v in g.sorted_edges()]
    lines.append("}")
    return "\n".join(lines) + "\n"

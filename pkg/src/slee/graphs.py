"""Immutable simple undirected graphs and basic structural operations.

Vertices are dense integers 0..n-1.  Everything downstream (spectra, walk
counting, enumeration) consumes this representation, so the class is kept
deliberately small: construction validates simplicity, and all derived
data (sorted neighbor lists) is frozen at construction time.
"""

from __future__ import annotations

import math
from collections import deque
from typing import Iterable

from .errors import ArgumentError, ContractError

INFINITY = math.inf


class Graph:
    """Simple undirected graph on vertices 0..n-1.

    Edges are normalized to a sorted tuple of (u, v) pairs with u < v.
    Instances are immutable, hashable and safe to share across threads.
    """

    __slots__ = ("n", "edges", "adjacency", "_hash")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()) -> None:
        if n < 0:
            raise ArgumentError(f"vertex count must be nonnegative, got {n}")
        seen: set[tuple[int, int]] = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ArgumentError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ArgumentError(f"self-loop at vertex {u}")
            e = (u, v) if u < v else (v, u)
            if e in seen:
                raise ArgumentError(f"duplicate edge {e}")
            seen.add(e)
        nbrs: list[list[int]] = [[] for _ in range(n)]
        for u, v in seen:
            nbrs[u].append(v)
            nbrs[v].append(u)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", tuple(sorted(seen)))
        object.__setattr__(self, "adjacency", tuple(tuple(sorted(a)) for a in nbrs))
        object.__setattr__(self, "_hash", hash((n, self.edges)))

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("Graph is immutable")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self.edges)})"

    @property
    def m(self) -> int:
        """Number of edges."""
        return len(self.edges)

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return len(self.adjacency[v])

    def neighbors(self, v: int) -> tuple[int, ...]:
        self._check_vertex(v)
        return self.adjacency[v]

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return v in self.adjacency[u]

    def add_edges(self, new_edges: Iterable[tuple[int, int]]) -> "Graph":
        """Return a new graph with the given edges added."""
        return Graph(self.n, list(self.edges) + list(new_edges))

    def remove_edges(self, old_edges: Iterable[tuple[int, int]]) -> "Graph":
        """Return a new graph with the given edges removed."""
        drop = set()
        for u, v in old_edges:
            e = (u, v) if u < v else (v, u)
            if e not in self.edges:
                raise ArgumentError(f"edge {e} not present")
            drop.add(e)
        return Graph(self.n, [e for e in self.edges if e not in drop])

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise ArgumentError(f"vertex {v} out of range for n={self.n}")


def degree(graph: Graph, v: int) -> int:
    """Degree of vertex v."""
    return graph.degree(v)


def non_pendent_neighbors(graph: Graph, v: int) -> frozenset[int]:
    """Neighbors of v having degree at least 2."""
    return frozenset(w for w in graph.neighbors(v) if graph.degree(w) >= 2)


def bfs_distances(graph: Graph, source: int) -> list[float]:
    """Shortest-path lengths from source; unreachable vertices get INFINITY."""
    graph._check_vertex(source)
    dist: list[float] = [INFINITY] * graph.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in graph.adjacency[u]:
            if dist[w] == INFINITY:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def distance(graph: Graph, u: int, v: int) -> float:
    """BFS shortest-path length between u and v; INFINITY if disconnected."""
    graph._check_vertex(v)
    return bfs_distances(graph, u)[v]


def is_connected(graph: Graph) -> bool:
    if graph.n == 0:
        return True
    return INFINITY not in bfs_distances(graph, 0)


def is_unicyclic(graph: Graph) -> bool:
    """True iff the graph is connected with equally many vertices and edges."""
    return graph.n >= 3 and graph.m == graph.n and is_connected(graph)


def unique_cycle(graph: Graph) -> tuple[int, ...]:
    """Vertices of the unique cycle of a unicyclic graph, in traversal order.

    Degree-1 vertices are deleted iteratively; what survives is the cycle.
    The result starts at the smallest cycle vertex and proceeds toward its
    smaller-labeled cycle neighbor, which makes the output deterministic.
    """
    if not is_unicyclic(graph):
        raise ContractError("unique_cycle requires a unicyclic graph")
    deg = [graph.degree(v) for v in range(graph.n)]
    alive = [True] * graph.n
    queue = deque(v for v in range(graph.n) if deg[v] == 1)
    while queue:
        v = queue.popleft()
        alive[v] = False
        for w in graph.adjacency[v]:
            if alive[w]:
                deg[w] -= 1
                if deg[w] == 1:
                    queue.append(w)
    members = [v for v in range(graph.n) if alive[v]]
    start = min(members)
    nxt = min(w for w in graph.adjacency[start] if alive[w])
    order = [start, nxt]
    while len(order) < len(members):
        prev, cur = order[-2], order[-1]
        step = next(w for w in graph.adjacency[cur] if alive[w] and w != prev)
        order.append(step)
    return tuple(order)


def diameter(graph: Graph) -> int:
    """Maximum pairwise distance; requires a connected graph."""
    if graph.n == 0:
        raise ContractError("diameter of the empty graph is undefined")
    best = 0
    for v in range(graph.n):
        ecc = max(bfs_distances(graph, v))
        if ecc == INFINITY:
            raise ContractError("diameter requires a connected graph")
        best = max(best, int(ecc))
    return best


def connected_components(graph: Graph) -> list[list[int]]:
    seen = [False] * graph.n
    comps = []
    for s in range(graph.n):
        if seen[s]:
            continue
        comp = [s]
        seen[s] = True
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in graph.adjacency[u]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        comps.append(sorted(comp))
    return comps


def to_dot(graph: Graph, name: str = "G") -> str:
    """Layout-free DOT text for human inspection (write-only format)."""
    lines = [f"graph {name} {{"]
    isolated = [v for v in range(graph.n) if graph.degree(v) == 0]
    for v in isolated:
        lines.append(f"  {v};")
    for u, v in graph.edges:
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"

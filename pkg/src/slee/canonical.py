"""Exact canonical forms via backtracking with partition refinement.

The canonical form of a graph is the lexicographically smallest upper
triangle bit string reachable by any vertex relabeling that lists the
refinement color classes in their invariant order.  The search
individualizes one vertex of the first non-singleton class at a time,
re-refines, and keeps the minimum over all leaves; vertices whose
neighborhoods coincide (twins) are interchangeable, so only one of them
is branched on.  This is exact for every graph and fast at the sizes
this package targets.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

from . import graph6
from .errors import LimitError
from .graphs import Graph

MAX_VERTICES = 16


@dataclass(frozen=True)
class CanonicalForm:
    """Relabeling-invariant encoding; equal iff the graphs are isomorphic."""

    n: int
    edges: tuple[tuple[int, int], ...]
    key: str  # graph6 of the canonical relabeling, usable as a hash key

    def graph(self) -> Graph:
        return Graph(self.n, self.edges)


def _refine(adj: tuple[tuple[int, ...], ...], colors: list[int]) -> list[int]:
    """Iterate neighborhood color refinement to a stable coloring.

    Class indices are assigned by sorting signatures, which makes the
    final coloring invariant under relabeling.
    """
    n = len(adj)
    while True:
        sigs = [(colors[v], tuple(sorted(colors[w] for w in adj[v]))) for v in range(n)]
        rank = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [rank[s] for s in sigs]
        if new == colors:
            return new
        colors = new


def _individualize(colors: list[int], v: int) -> list[int]:
    marked = [(c, 1) for c in colors]
    marked[v] = (colors[v], 0)
    rank = {s: i for i, s in enumerate(sorted(set(marked)))}
    return [rank[s] for s in marked]


def _first_nonsingleton_cell(colors: list[int]) -> list[int]:
    cells: dict[int, list[int]] = {}
    for v, c in enumerate(colors):
        cells.setdefault(c, []).append(v)
    for c in sorted(cells):
        if len(cells[c]) > 1:
            return cells[c]
    return []


def _upper_triangle(adj_sets: list[set[int]], perm: list[int]) -> bytes:
    bits = bytearray()
    for j in range(1, len(perm)):
        pj = perm[j]
        for i in range(j):
            bits.append(1 if perm[i] in adj_sets[pj] else 0)
    return bytes(bits)


def canonical_form(graph: Graph) -> CanonicalForm:
    """Compute the canonical form of a graph (exact isomorphism invariant)."""
    n = graph.n
    if n > MAX_VERTICES:
        raise LimitError(f"canonical_form supports n <= {MAX_VERTICES}, got {n}")
    if n == 0:
        return CanonicalForm(0, (), graph6.graph6_encode(graph))
    adj = graph.adjacency
    adj_sets = [set(a) for a in adj]
    best: list[tuple[bytes, list[int]] | None] = [None]

    def search(colors: list[int]) -> None:
        cell = _first_nonsingleton_cell(colors)
        if not cell:
            perm = sorted(range(n), key=colors.__getitem__)
            tri = _upper_triangle(adj_sets, perm)
            if best[0] is None or tri < best[0][0]:
                best[0] = (tri, perm)
            return
        branched: list[int] = []
        for v in cell:
            # vertices with identical neighborhoods are swapped by an
            # automorphism, so one representative per twin class suffices
            if any(adj_sets[v] - {w} == adj_sets[w] - {v} for w in branched):
                continue
            branched.append(v)
            search(_refine(adj, _individualize(colors, v)))

    search(_refine(adj, [0] * n))
    assert best[0] is not None
    tri, perm = best[0]
    relabel = [0] * n
    for new, old in enumerate(perm):
        relabel[old] = new
    edges = tuple(sorted(tuple(sorted((relabel[u], relabel[v]))) for u, v in graph.edges))
    key = graph6.graph6_encode(Graph(n, edges))
    return CanonicalForm(n, edges, key)


def isomorphic_by_bruteforce(a: Graph, b: Graph) -> bool:
    """Try all n! vertex relabelings; the slow reference oracle (n <= 8)."""
    if a.n != b.n or a.m != b.m:
        return False
    if a.n > 8:
        raise LimitError(f"brute-force isomorphism supports n <= 8, got {a.n}")
    target = set(b.edges)
    for perm in permutations(range(a.n)):
        if all(
            ((perm[u], perm[v]) if perm[u] < perm[v] else (perm[v], perm[u])) in target
            for u, v in a.edges
        ):
            return True
    return False


def are_isomorphic(a: Graph, b: Graph) -> bool:
    """Backtracking isomorphism test guided by refinement colors."""
    if a.n != b.n or a.m != b.m:
        return False
    n = a.n
    if n == 0:
        return True
    ca = _refine(a.adjacency, [0] * n)
    cb = _refine(b.adjacency, [0] * n)
    if sorted(ca) != sorted(cb):
        return False
    b_sets = [set(x) for x in b.adjacency]
    by_color: dict[int, list[int]] = {}
    for v, c in enumerate(cb):
        by_color.setdefault(c, []).append(v)
    # map rarest color classes first
    order = sorted(range(n), key=lambda v: (len(by_color[ca[v]]), ca[v], v))
    mapping = [-1] * n
    used = [False] * n

    def extend(pos: int) -> bool:
        if pos == n:
            return True
        u = order[pos]
        for v in by_color[ca[u]]:
            if used[v]:
                continue
            ok = True
            for w in a.adjacency[u]:
                mw = mapping[w]
                if mw >= 0 and mw not in b_sets[v]:
                    ok = False
                    break
            if not ok:
                continue
            mapping[u] = v
            used[v] = True
            if extend(pos + 1):
                return True
            mapping[u] = -1
            used[v] = False
        return False

    return extend(0)


def count_automorphisms(graph: Graph) -> int:
    """Number of adjacency-preserving vertex permutations."""
    n = graph.n
    if n == 0:
        return 1
    colors = _refine(graph.adjacency, [0] * n)
    by_color: dict[int, list[int]] = {}
    for v, c in enumerate(colors):
        by_color.setdefault(c, []).append(v)
    adj_sets = [set(a) for a in graph.adjacency]
    order = sorted(range(n), key=lambda v: (len(by_color[colors[v]]), colors[v], v))
    mapping = [-1] * n
    used = [False] * n
    total = 0

    def extend(pos: int) -> None:
        nonlocal total
        if pos == n:
            total += 1
            return
        u = order[pos]
        for v in by_color[colors[u]]:
            if used[v]:
                continue
            ok = True
            for w in graph.adjacency[u]:
                mw = mapping[w]
                if mw >= 0 and mw not in adj_sets[v]:
                    ok = False
                    break
            if not ok:
                continue
            mapping[u] = v
            used[v] = True
            extend(pos + 1)
            mapping[u] = -1
            used[v] = False

    extend(0)
    return total

"""Exact semi-edge-walk combinatorics.

A semi-edge walk of length k is an alternating sequence
v1 e1 v2 ... vk ek v(k+1) in which consecutive vertices vi and v(i+1) are
endpoints of the edge ei but need not be distinct: a walk may "stand
still" on an edge.  Entry (x, y) of the k-th power of the signless
Laplacian Q = D + A counts such walks from x to y exactly, so walk
tables are computed with arbitrary-precision integer matrix powers and a
separate brute-force enumerator serves as an independent oracle.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Sequence

from .errors import ArgumentError, LimitError
from .graphs import Graph

DEFAULT_MAX_K = 20

ENUM_MAX_N = 6
ENUM_MAX_K = 8
_COUNT_WORK_LIMIT = 200_000_000


class Relation(enum.Enum):
    """Outcome of a bounded dominance comparison between count vectors.

    The classifier reports EQUAL when no checked length is strict, so
    LESS_OR_EQUAL never comes out of a comparison; it exists so callers
    can state the weaker hypothesis that is_less_or_equal accepts.
    """

    STRICTLY_LESS = "strictly-less"
    LESS_OR_EQUAL = "less-or-equal-all-checked"
    EQUAL = "equal-all-checked"
    STRICTLY_GREATER = "strictly-greater"
    INCOMPARABLE = "incomparable"


@dataclass(frozen=True)
class DominanceVerdict:
    """Bounded verdict: the relation holds for all checked k <= checked_up_to.

    A strict verdict is witnessed at witness_k; the unbounded relation over
    every k is never claimed.
    """

    relation: Relation
    witness_k: int | None
    checked_up_to: int

    @property
    def is_less_or_equal(self) -> bool:
        return self.relation in (Relation.STRICTLY_LESS, Relation.LESS_OR_EQUAL, Relation.EQUAL)

    def __str__(self) -> str:
        tail = f" (witness k={self.witness_k})" if self.witness_k is not None else ""
        return f"{self.relation.value} up to K={self.checked_up_to}{tail}"


def signless_laplacian_int(graph: Graph) -> list[list[int]]:
    """Q = D + A as a list-of-rows integer matrix."""
    n = graph.n
    q = [[0] * n for _ in range(n)]
    for v in range(n):
        q[v][v] = graph.degree(v)
    for u, v in graph.edges:
        q[u][v] = 1
        q[v][u] = 1
    return q


def _mat_mult(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> list[list[int]]:
    n = len(a)
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


class WalkCountTable:
    """Exact counts of semi-edge walks per endpoint pair per length.

    counts[k][x][y] = number of semi-edge walks of length k from x to y,
    i.e. the (x, y) entry of Q**k with exact integer arithmetic.
    """

    def __init__(self, graph: Graph, max_k: int) -> None:
        if max_k < 0:
            raise ArgumentError(f"max_k must be nonnegative, got {max_k}")
        n = graph.n
        q = signless_laplacian_int(graph)
        mats: list[tuple[tuple[int, ...], ...]] = []
        current: list[list[int]] = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
        mats.append(tuple(tuple(row) for row in current))
        for _ in range(max_k):
            current = _mat_mult(current, q)
            mats.append(tuple(tuple(row) for row in current))
        self.n = n
        self.K = max_k
        self.counts = tuple(mats)

    def entry(self, k: int, x: int, y: int) -> int:
        return self.counts[k][x][y]

    def trace(self, k: int) -> int:
        """Total closed semi-edge walks of length k (the exact moment T_k)."""
        return sum(self.counts[k][v][v] for v in range(self.n))

    def closed_profile(self, x: int) -> tuple[int, ...]:
        """Counts of closed walks at x for k = 0..K."""
        return tuple(self.counts[k][x][x] for k in range(self.K + 1))

    def pair_profile(self, x: int, y: int) -> tuple[int, ...]:
        """Counts of walks from x to y for k = 0..K."""
        return tuple(self.counts[k][x][y] for k in range(self.K + 1))


def walk_counts(graph: Graph, max_k: int) -> WalkCountTable:
    """Exact integer table of Q**k for k = 0..max_k."""
    return WalkCountTable(graph, max_k)


def enumerate_semi_edge_walks(
    graph: Graph, x: int, y: int, k: int
) -> list[tuple[object, ...]]:
    """Materialize every semi-edge walk of length k from x to y.

    Walks are returned as alternating tuples (v0, e0, v1, ..., e(k-1), vk)
    with edges as (min, max) pairs.  Exponential; limited to n <= 6 and
    k <= 8, refused beyond that.
    """
    graph._check_vertex(x)
    graph._check_vertex(y)
    if graph.n > ENUM_MAX_N:
        raise LimitError(f"walk enumeration supports n <= {ENUM_MAX_N}, got n={graph.n}")
    if k > ENUM_MAX_K:
        raise LimitError(f"walk enumeration supports k <= {ENUM_MAX_K}, got k={k}")
    if k < 0:
        raise ArgumentError(f"walk length must be nonnegative, got {k}")
    incident: list[list[tuple[int, int]]] = [[] for _ in range(graph.n)]
    for e in graph.edges:
        incident[e[0]].append(e)
        incident[e[1]].append(e)
    walks: list[tuple[object, ...]] = []

    def extend(prefix: list[object], at: int, remaining: int) -> None:
        if remaining == 0:
            if at == y:
                walks.append(tuple(prefix))
            return
        for e in incident[at]:
            # both endpoints are legal next vertices, including standing still
            for nxt in (e[0], e[1]):
                prefix.append(e)
                prefix.append(nxt)
                extend(prefix, nxt, remaining - 1)
                prefix.pop()
                prefix.pop()

    extend([x], x, k)
    return walks


def count_semi_edge_walks(graph: Graph, x: int, max_k: int) -> list[list[int]]:
    """Brute-force tallies of semi-edge walks from x, by length and endpoint.

    Returns tallies[k][y] for k = 0..max_k.  Walks are enumerated one step
    at a time without any matrix arithmetic, so this is an oracle
    independent of walk_counts.
    """
    graph._check_vertex(x)
    if max_k < 0:
        raise ArgumentError(f"max_k must be nonnegative, got {max_k}")
    max_deg = max((graph.degree(v) for v in range(graph.n)), default=0)
    work = (2 * max_deg) ** max_k if max_deg else 1
    if work > _COUNT_WORK_LIMIT:
        raise LimitError(
            f"walk counting work bound (2*maxdeg)**K = {work} exceeds {_COUNT_WORK_LIMIT}"
        )
    incident: list[list[tuple[int, int]]] = [[] for _ in range(graph.n)]
    for e in graph.edges:
        incident[e[0]].append(e)
        incident[e[1]].append(e)
    tallies = [[0] * graph.n for _ in range(max_k + 1)]
    tallies[0][x] = 1

    def extend(at: int, depth: int) -> None:
        if depth == max_k:
            return
        for u, v in incident[at]:
            for nxt in (u, v):
                tallies[depth + 1][nxt] += 1
                extend(nxt, depth + 1)

    extend(x, 0)
    return tallies


def _classify(seq_a: Sequence[int], seq_b: Sequence[int], checked_up_to: int) -> DominanceVerdict:
    witness = None
    any_lt = any_gt = False
    for k, (a, b) in enumerate(zip(seq_a, seq_b)):
        if a < b:
            any_lt = True
        elif a > b:
            any_gt = True
        if a != b and witness is None:
            witness = k
    if any_lt and any_gt:
        relation = Relation.INCOMPARABLE
    elif any_lt:
        relation = Relation.STRICTLY_LESS
    elif any_gt:
        relation = Relation.STRICTLY_GREATER
    else:
        relation = Relation.EQUAL
    return DominanceVerdict(relation, witness, checked_up_to)


def compare_s(graph: Graph, x: int, y: int, max_k: int = DEFAULT_MAX_K) -> DominanceVerdict:
    """Compare closed-walk count vectors at x versus y for all k <= max_k."""
    if max_k < 1:
        raise ArgumentError(f"max_k must be at least 1, got {max_k}")
    table = walk_counts(graph, max_k)
    return _classify(table.closed_profile(x), table.closed_profile(y), max_k)


def compare_s_pair(
    graph: Graph, w: int, x: int, y: int, max_k: int = DEFAULT_MAX_K
) -> DominanceVerdict:
    """Compare walk counts from w to x versus from w to y for all k <= max_k."""
    if max_k < 1:
        raise ArgumentError(f"max_k must be at least 1, got {max_k}")
    table = walk_counts(graph, max_k)
    return _classify(table.pair_profile(w, x), table.pair_profile(w, y), max_k)


def compare_s_from_table(table: WalkCountTable, x: int, y: int) -> DominanceVerdict:
    """compare_s against a precomputed table (avoids rebuilding Q powers)."""
    return _classify(table.closed_profile(x), table.closed_profile(y), table.K)


def compare_s_pair_from_table(table: WalkCountTable, w: int, x: int, y: int) -> DominanceVerdict:
    """compare_s_pair against a precomputed table."""
    return _classify(table.pair_profile(w, x), table.pair_profile(w, y), table.K)

"""Exhaustive, isomorphism-free enumeration of unicyclic graphs.

The primary generator composes rooted forests onto cycle positions: for
each cycle length q and each composition of the remaining vertices into
q parts, every choice of rooted tree per part is materialized and the
batch is deduplicated by exact canonical form.  Dihedral symmetry is not
handled arithmetically; the canonical dedup absorbs it, and a completely
independent labeled-subset oracle guards completeness.

The oracle enumerates all edge subsets of size n on n labeled vertices,
keeps the connected ones, and counts isomorphism classes.  A vectorized
variant groups the survivors by an invariant certificate and confirms
each group's composition exactly through automorphism counting
(n!/|Aut| labeled copies per class); the plain variant literally
canonicalizes every survivor.  Both are exposed and cross-checked.
"""

from __future__ import annotations

import math
import os
import random
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from itertools import chain, combinations, combinations_with_replacement, product

import numpy as np

from .canonical import are_isomorphic, canonical_form, count_automorphisms
from .errors import LimitError
from .graphs import Graph, diameter, is_connected, is_unicyclic

MAX_N = 10
ORACLE_MAX_N = 8
SIMPLE_ORACLE_MAX_N = 6


@dataclass(frozen=True)
class EnumerationResult:
    """Canonical representatives of unicyclic isomorphism classes."""

    n: int
    diameter_filter: int | None
    graphs: tuple[Graph, ...]

    @property
    def count(self) -> int:
        return len(self.graphs)


@lru_cache(maxsize=None)
def _partitions(total: int) -> tuple[tuple[int, ...], ...]:
    """Nonincreasing partitions of total into positive parts."""
    if total == 0:
        return ((),)
    out = []

    def rec(remaining: int, cap: int, prefix: list[int]) -> None:
        if remaining == 0:
            out.append(tuple(prefix))
            return
        for part in range(min(cap, remaining), 0, -1):
            prefix.append(part)
            rec(remaining - part, part, prefix)
            prefix.pop()

    rec(total, total, [])
    return tuple(out)


@lru_cache(maxsize=None)
def rooted_tree_codes(m: int) -> tuple[tuple, ...]:
    """Canonical codes of rooted trees on m vertices.

    A code is the sorted tuple of child subtree codes; two rooted trees
    share a code iff they are isomorphic as rooted trees.
    """
    if m < 1:
        raise LimitError(f"rooted trees need at least one vertex, got {m}")
    if m == 1:
        return ((),)
    result = set()
    for partition in _partitions(m - 1):
        options = []
        for size, mult in sorted(Counter(partition).items()):
            options.append(list(combinations_with_replacement(rooted_tree_codes(size), mult)))
        for combo in product(*options):
            children = tuple(sorted(chain.from_iterable(combo)))
            result.add(children)
    return tuple(sorted(result))


def _materialize(code: tuple, root: int, edges: list[tuple[int, int]], nxt: int) -> int:
    for child in code:
        cid = nxt
        nxt += 1
        edges.append((root, cid))
        nxt = _materialize(child, cid, edges, nxt)
    return nxt


def _compositions(total: int, parts: int):
    """All tuples of `parts` nonnegative integers summing to total."""
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first, *rest)


def _generation_tasks(n: int) -> list[tuple[int, tuple[int, ...]]]:
    return [(q, comp) for q in range(3, n + 1) for comp in _compositions(n - q, q)]


def _task_classes(n: int, task: tuple[int, tuple[int, ...]]) -> dict[str, Graph]:
    q, comp = task
    found: dict[str, Graph] = {}
    choices = [rooted_tree_codes(c + 1) for c in comp]
    cycle_edges = [(i, (i + 1) % q) for i in range(q)]
    for pick in product(*choices):
        edges = list(cycle_edges)
        nxt = q
        for root, code in enumerate(pick):
            nxt = _materialize(code, root, edges, nxt)
        form = canonical_form(Graph(n, edges))
        found.setdefault(form.key, form.graph())
    return found


def _worker_count(workers: int | None) -> int:
    if workers is not None:
        return max(1, workers)
    env = os.environ.get("SLEE_WORKERS")
    if env:
        return max(1, int(env))
    return 1


_ENUM_CACHE: dict[int, EnumerationResult] = {}


def enumerate_unicyclic(
    n: int, *, workers: int | None = None, task_seed: int | None = None
) -> EnumerationResult:
    """One canonical representative per unicyclic isomorphism class on n vertices.

    `workers` fans the per-task generation out over a thread pool and
    `task_seed` shuffles the task order; the merged, canonically sorted
    output is identical for every schedule.  Limited to 3 <= n <= 10.
    Default-schedule results are memoized (they are immutable).
    """
    if not 3 <= n <= MAX_N:
        raise LimitError(f"enumeration supports 3 <= n <= {MAX_N}, got n={n}")
    default_schedule = workers is None and task_seed is None
    if default_schedule and n in _ENUM_CACHE:
        return _ENUM_CACHE[n]
    tasks = _generation_tasks(n)
    if task_seed is not None:
        random.Random(task_seed).shuffle(tasks)
    merged: dict[str, Graph] = {}
    count = _worker_count(workers)
    if count > 1:
        with ThreadPoolExecutor(max_workers=count) as pool:
            for partial in pool.map(lambda t: _task_classes(n, t), tasks):
                merged.update(partial)
    else:
        for task in tasks:
            merged.update(_task_classes(n, task))
    graphs = tuple(merged[key] for key in sorted(merged))
    result = EnumerationResult(n, None, graphs)
    if default_schedule:
        _ENUM_CACHE[n] = result
    return result


def filter_by_diameter(result: EnumerationResult, d: int) -> EnumerationResult:
    """Subset of an enumeration whose members have diameter exactly d."""
    graphs = tuple(g for g in result.graphs if diameter(g) == d)
    return EnumerationResult(result.n, d, graphs)


# ---------------------------------------------------------------------------
# independent labeled-subset oracle


def enumerate_unicyclic_labeled_oracle(n: int, method: str = "auto") -> int:
    """Count unicyclic isomorphism classes by brute force over labeled graphs.

    method="simple" canonicalizes every connected n-edge subset directly
    (n <= 6); method="grouped" is the vectorized variant (n <= 8);
    "auto" picks simple through n=5 and grouped beyond.
    """
    if not 3 <= n <= ORACLE_MAX_N:
        raise LimitError(f"labeled oracle supports 3 <= n <= {ORACLE_MAX_N}, got n={n}")
    if method == "auto":
        method = "simple" if n <= 5 else "grouped"
    if method == "simple":
        if n > SIMPLE_ORACLE_MAX_N:
            raise LimitError(
                f"simple oracle supports n <= {SIMPLE_ORACLE_MAX_N}, got n={n}"
            )
        return _oracle_simple(n)
    if method == "grouped":
        return _oracle_grouped(n)
    raise LimitError(f"unknown oracle method {method!r}")


def _oracle_simple(n: int) -> int:
    pairs = list(combinations(range(n), 2))
    seen: set[str] = set()
    for subset in combinations(pairs, n):
        g = Graph(n, subset)
        if is_connected(g):
            seen.add(canonical_form(g).key)
    return len(seen)


def _connected_masks(n: int, pairs: list[tuple[int, int]]) -> tuple[np.ndarray, np.ndarray]:
    """Edge-index rows and adjacency bitsets of all connected n-edge subsets."""
    p = len(pairs)
    idx = np.fromiter(
        chain.from_iterable(combinations(range(p), n)), dtype=np.int8
    ).reshape(-1, n)
    contrib = np.zeros((p, n), dtype=np.uint8)
    for k, (u, v) in enumerate(pairs):
        contrib[k, u] = 1 << v
        contrib[k, v] = 1 << u
    adj_bits = contrib[idx[:, 0]].copy()
    for c in range(1, n):
        adj_bits |= contrib[idx[:, c]]
    reach = np.ones(len(idx), dtype=np.uint8)
    for _ in range(n):
        for v in range(n):
            sel = (reach >> v) & 1
            reach |= adj_bits[:, v] * sel
    connected = reach == (1 << n) - 1
    return idx[connected], adj_bits[connected]


def _wl_certificates(adj_bits: np.ndarray, n: int) -> np.ndarray:
    """Sorted stable-refinement signatures per graph, packed into uint64 rows."""
    certs = []
    for start in range(0, len(adj_bits), 200_000):
        block = adj_bits[start : start + 200_000]
        a = np.unpackbits(block[:, :, None], axis=2, bitorder="little", count=n)
        colors = a.sum(axis=2, dtype=np.uint8)
        sig = None
        for _ in range(n):
            ncol = np.where(a == 1, colors[:, None, :], np.uint8(15)).astype(np.uint8)
            ncol.sort(axis=2)
            sig = colors.astype(np.uint64)
            for j in range(n):
                sig = (sig << np.uint64(4)) | ncol[:, :, j]
            new_colors = (sig[:, None, :] < sig[:, :, None]).sum(axis=2, dtype=np.uint8)
            if np.array_equal(new_colors, colors):
                break
            colors = new_colors
        certs.append(np.sort(sig, axis=1))
    return np.vstack(certs)


def _oracle_grouped(n: int) -> int:
    pairs = list(combinations(range(n), 2))
    idx, adj_bits = _connected_masks(n, pairs)
    certs = _wl_certificates(adj_bits, n)
    _, first_index, inverse, group_sizes = np.unique(
        certs, axis=0, return_index=True, return_inverse=True, return_counts=True
    )
    inverse = inverse.ravel()
    total_labeled = 0
    reps: list[Graph] = []
    fact = math.factorial(n)
    for g, size in enumerate(group_sizes):
        first = Graph(n, [pairs[k] for k in idx[first_index[g]]])
        group_reps = [first]
        accounted = fact // count_automorphisms(first)
        if accounted < size:
            # rare: the certificate bucket mixes classes; scan members
            members = np.nonzero(inverse == g)[0]
            for row in members:
                if accounted == size:
                    break
                cand = Graph(n, [pairs[k] for k in idx[row]])
                if any(are_isomorphic(cand, rep) for rep in group_reps):
                    continue
                group_reps.append(cand)
                accounted += fact // count_automorphisms(cand)
        if accounted != size:
            raise AssertionError(
                f"labeled-copy audit failed for certificate group {g}: "
                f"{accounted} accounted vs {size} present"
            )
        total_labeled += accounted
        reps.extend(group_reps)
    if total_labeled != len(idx):
        raise AssertionError("labeled-copy audit failed globally")
    keys = {canonical_form(rep).key for rep in reps}
    if len(keys) != len(reps):
        raise AssertionError("certificate groups produced duplicate canonical forms")
    return len(reps)


def save_enumeration(result: EnumerationResult, path) -> int:
    """Cache an enumeration as a graph6 line file; returns the line count."""
    from .graph6 import write_graph6_file

    return write_graph6_file(path, result.graphs)


def load_enumeration(path) -> EnumerationResult:
    """Rebuild an EnumerationResult from a graph6 line file.

    Members are re-sorted canonically; the vertex count must be uniform.
    """
    from .graph6 import read_graph6_file

    graphs = read_graph6_file(path)
    if not graphs:
        raise LimitError(f"no graphs found in {path!r}")
    sizes = {g.n for g in graphs}
    if len(sizes) != 1:
        raise LimitError(f"mixed vertex counts {sorted(sizes)} in {path!r}")
    keyed = {canonical_form(g).key: g for g in graphs}
    ordered = tuple(Graph(g.n, canonical_form(g).edges) for _, g in sorted(keyed.items()))
    return EnumerationResult(sizes.pop(), None, ordered)


# ---------------------------------------------------------------------------
# sanity helpers used by the verification layer and tests


def assert_result_valid(result: EnumerationResult) -> None:
    """Raise if any member is not unicyclic or two members are isomorphic."""
    keys = set()
    for g in result.graphs:
        if not is_unicyclic(g):
            raise AssertionError(f"non-unicyclic member {g!r}")
        key = canonical_form(g).key
        if key in keys:
            raise AssertionError(f"duplicate isomorphism class {key}")
        keys.add(key)

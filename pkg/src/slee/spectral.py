"""Signless Laplacian spectra, SLEE, spectral moments, series cross-check.

SLEE(G) is the sum of e**q over the eigenvalues q of Q = D + A.  The
graphs here are tiny, so a dense symmetric eigensolver is used and the
exponential sum is accumulated from the smallest eigenvalue upward for
floating-point stability.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import ArgumentError
from .graphs import Graph
from .semiwalk import walk_counts


@dataclass(frozen=True)
class SpectralSummary:
    """Eigenvalues of Q (descending), SLEE, and moments T_k for k = 0..K."""

    eigenvalues: tuple[float, ...]
    slee: float
    moments: tuple[float, ...]


def signless_laplacian(graph: Graph) -> np.ndarray:
    """Q = D + A as a symmetric integer matrix."""
    n = graph.n
    q = np.zeros((n, n), dtype=np.int64)
    for v in range(n):
        q[v, v] = graph.degree(v)
    for u, v in graph.edges:
        q[u, v] = 1
        q[v, u] = 1
    return q


def q_spectrum(graph: Graph) -> list[float]:
    """Eigenvalues of Q, sorted descending."""
    if graph.n == 0:
        return []
    eig = np.linalg.eigvalsh(signless_laplacian(graph).astype(np.float64))
    return [float(x) for x in eig[::-1]]


def slee(graph: Graph) -> float:
    """Signless Laplacian Estrada index: sum of exp(q_i).

    Summed in ascending eigenvalue order so the small terms accumulate
    first.
    """
    if graph.n == 0:
        return 0.0
    eig = np.linalg.eigvalsh(signless_laplacian(graph).astype(np.float64))
    return math.fsum(math.exp(float(x)) for x in eig)


def spectral_moment(graph: Graph, k: int) -> float:
    """T_k = sum of q_i**k over the computed spectrum."""
    if k < 0:
        raise ArgumentError(f"moment order must be nonnegative, got {k}")
    if graph.n == 0:
        return 0.0
    eig = np.linalg.eigvalsh(signless_laplacian(graph).astype(np.float64))
    return math.fsum(float(x) ** k for x in eig)


def eigenvalue_upper_bound(graph: Graph) -> int:
    """2 * max degree, a safe upper bound for the largest eigenvalue of Q."""
    return 2 * max((graph.degree(v) for v in range(graph.n)), default=0)


def slee_series(graph: Graph, max_k: int) -> tuple[float, float]:
    """Truncated series sum of T_k / k! with a conservative remainder bound.

    The T_k are exact integers from the walk-count table.  The remainder
    of the series past K is at most n * qhat**(K+1) * e**qhat / (K+1)!
    where qhat bounds every eigenvalue, so (partial, partial + bound)
    sandwiches the true SLEE.
    """
    if max_k < 0:
        raise ArgumentError(f"max_k must be nonnegative, got {max_k}")
    table = walk_counts(graph, max_k)
    partial = math.fsum(table.trace(k) / math.factorial(k) for k in range(max_k + 1))
    qhat = eigenvalue_upper_bound(graph)
    if qhat == 0:
        bound = 0.0
    else:
        # computed in log space; qhat**(K+1) alone can overflow a float
        log_bound = math.log(graph.n) + (max_k + 1) * math.log(qhat) + qhat - math.lgamma(max_k + 2)
        bound = math.exp(log_bound)
    return partial, bound


def spectral_summary(graph: Graph, moments_up_to: int = 6) -> SpectralSummary:
    """Bundle of spectrum, SLEE and the first moments."""
    if moments_up_to < 0:
        raise ArgumentError(f"moments_up_to must be nonnegative, got {moments_up_to}")
    eig_desc = q_spectrum(graph)
    eig_asc = eig_desc[::-1]
    value = math.fsum(math.exp(x) for x in eig_asc)
    moments = tuple(math.fsum(x ** k for x in eig_asc) for k in range(moments_up_to + 1))
    return SpectralSummary(tuple(eig_desc), value, moments)

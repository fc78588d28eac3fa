"""Brute-force baselines: repeated-Dijkstra APSP, Floyd-Warshall and full
matrix scans. These are the ground truth for property tests and the slow side
of every speedup measurement.
"""
from __future__ import annotations

import time
from dataclasses import dataclass

import numpy as np

from .graph import Graph
from .sssp import DistanceMatrix, sssp

DEFAULT_MATRIX_CAP = 20_000  # n*n float64 beyond this is not desk-scale


@dataclass(frozen=True)
class OracleMetrics:
    radius: float
    all_centers: list[int]
    diameter: float
    all_peripheral_pairs: list[tuple[int, int]]
    matrix: DistanceMatrix
    elapsed: float  # seconds, scan only


def apsp_repeated_sssp(g: Graph) -> DistanceMatrix:
    """All-pairs distances as one Dijkstra run per vertex."""
    rows = np.empty((g.n, g.n))
    for i in range(g.n):
        rows[i] = sssp(g, i).dist
    return DistanceMatrix(n=g.n, values=rows)


def floyd_warshall(g: Graph, max_n: int = DEFAULT_MATRIX_CAP) -> DistanceMatrix:
    """Classic triple-loop APSP, vectorized over the inner two indices."""
    n = g.n
    if n > max_n:
        raise MemoryError(f"floyd_warshall refused: n={n} exceeds cap {max_n}")
    D = np.full((n, n), np.inf)
    np.fill_diagonal(D, 0.0)
    for u in range(n):
        lo, hi = g.indptr[u], g.indptr[u + 1]
        D[u, g.indices[lo:hi]] = g.weights[lo:hi]
    for k in range(n):
        np.minimum(D, D[:, k, None] + D[None, k, :], out=D)
    if np.isinf(D).any():
        bad = int(np.flatnonzero(np.isinf(D[0]))[0])
        raise ValueError(f"graph is disconnected: vertex {bad} unreachable from 0")
    return DistanceMatrix(n=n, values=D)


def scan_radius(M: DistanceMatrix) -> tuple[float, int]:
    """Trivial radius scan: minimum over rows of the row maximum (RC2)."""
    row_max = M.values.max(axis=1)
    c = int(row_max.argmin())
    return float(row_max[c]), c


def scan_diameter(M: DistanceMatrix) -> tuple[float, tuple[int, int]]:
    """Trivial diameter scan over the matrix (DC2).

    The flat maximum equals the upper-triangle maximum: the diagonal is zero,
    entries are non-negative and the matrix is symmetric.
    """
    flat = int(M.values.argmax())
    i, j = divmod(flat, M.n)
    if i > j:
        i, j = j, i
    return float(M.values[i, j]), (i, j)


def scan_metrics(M: DistanceMatrix) -> OracleMetrics:
    """Exhaustive scan: radius, diameter and ALL centers / peripheral pairs."""
    start = time.perf_counter()
    values = M.values
    row_max = values.max(axis=1)
    radius = float(row_max.min())
    centers = np.flatnonzero(row_max == radius).tolist()
    if M.n == 1:
        diameter = 0.0
        pairs: list[tuple[int, int]] = []
    else:
        diameter = float(row_max.max())
        ii, jj = np.nonzero(values == diameter)
        pairs = [(int(a), int(b)) for a, b in zip(ii, jj) if a < b]
    elapsed = time.perf_counter() - start
    return OracleMetrics(
        radius=radius,
        all_centers=centers,
        diameter=diameter,
        all_peripheral_pairs=pairs,
        matrix=M,
        elapsed=elapsed,
    )


def choose_baseline(g: Graph, which: str = "auto") -> str:
    """Pick the APSP baseline: Floyd-Warshall for dense, Dijkstra for sparse."""
    if which in ("dijkstra", "floyd"):
        return which
    return "floyd" if g.average_degree > g.n / 4.0 else "dijkstra"


def build_matrix(g: Graph, baseline: str = "auto", max_n: int = DEFAULT_MATRIX_CAP) -> DistanceMatrix:
    if g.n > max_n:
        raise MemoryError(f"distance matrix refused: n={g.n} exceeds cap {max_n}")
    if choose_baseline(g, baseline) == "floyd":
        return floyd_warshall(g, max_n=max_n)
    return apsp_repeated_sssp(g)

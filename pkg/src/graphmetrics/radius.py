"""Pivot-driven center and radius search.

A small set of pivot vertices bounds every vertex's eccentricity from below
(max distance to any pivot). The search repeatedly verifies the most
promising candidate center until the lower and upper radius bounds meet,
touching only a small fraction of the graph's distance rows.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .sssp import DistanceProvider, DistanceRow, eccentricity

FAR_PAIR_CAP = 64  # ties can make the far-pair walk cycle; any pair is sound


@dataclass
class PivotState:
    """Mutable search state: pivots, per-vertex pivot maxima and bounds.

    One array (_candidate_key) holds the pivot maxima with examined vertices
    pinned at +inf, so candidate selection is a single argmin; the handful of
    examined vertices keep their true maxima in a side dict. The pivot_max
    property reassembles the full per-vertex maxima on demand.
    """

    n: int
    _candidate_key: np.ndarray | None = None
    _examined_max: dict[int, float] = field(default_factory=dict)
    pivots: list[int] = field(default_factory=list)
    r_lower: float = 0.0
    r_upper: float = math.inf
    best_center: int | None = None

    @classmethod
    def new(cls, n: int) -> "PivotState":
        return cls(n=n)

    @property
    def examined(self) -> list[int]:
        return list(self._examined_max)

    @property
    def pivot_max(self) -> np.ndarray:
        """pivot_max[i] = max over current pivots p of distance(i, p)."""
        if self._candidate_key is None:
            return np.full(self.n, -math.inf)
        arr = self._candidate_key.copy()
        for v, val in self._examined_max.items():
            arr[v] = val
        return arr

    def update_pivot_max(self, row: DistanceRow) -> None:
        """Fold a new pivot's distance row into the per-vertex maxima."""
        if row.source in self.pivots:
            return  # duplicate pivot adds no information
        dist = row.dist
        if self._candidate_key is None:
            self._candidate_key = dist.copy()
        else:
            # max(inf, x) == inf keeps examined entries pinned
            np.maximum(self._candidate_key, dist, out=self._candidate_key)
            for v, val in self._examined_max.items():
                dv = float(dist[v])
                if dv > val:
                    self._examined_max[v] = dv
        self.pivots.append(row.source)

    def mark_examined(self, v: int) -> None:
        if v not in self._examined_max:
            self._examined_max[v] = float(self._candidate_key[v])
            self._candidate_key[v] = math.inf

    def select_candidate(self) -> tuple[int, float] | None:
        """Unexamined vertex with the smallest pivot-max bound.

        The radius lower bound is the minimum of pivot_max over ALL vertices
        (every vertex's eccentricity is at least its pivot_max entry, so the
        smallest entry bounds the radius). Returns None when every vertex
        has been examined.
        """
        if len(self._examined_max) == self.n:
            return None
        c = int(self._candidate_key.argmin())
        r_l = float(self._candidate_key[c])
        if self._examined_max:
            r_l = min(r_l, min(self._examined_max.values()))
        if r_l > self.r_lower:
            self.r_lower = r_l
        else:
            r_l = self.r_lower
        return c, r_l


def far_pair(provider: DistanceProvider) -> tuple[int, int]:
    """Find two mutually remote vertices by the farthest-vertex walk.

    Start at vertex 0 and repeatedly jump to the farthest vertex (smallest
    id on ties) until the walk revisits the vertex two steps back, or the
    step cap is hit. Every returned vertex has its row already cached.
    """
    n = provider.n
    if n == 1:
        return 0, 0
    prev: int | None = None
    cur = 0
    cap = min(n, FAR_PAIR_CAP)
    for _ in range(cap):
        _, nxt = eccentricity(provider.row(cur))
        if nxt == prev:
            return cur, nxt
        prev, cur = cur, nxt
    return prev, cur


@dataclass(frozen=True)
class RadiusResult:
    radius: float
    center: int
    pivots: list[int]
    candidates_examined: int
    sssp_count: int
    rows_accessed: int
    bound_trace: list[tuple[float, float]]


def find_radius(provider: DistanceProvider) -> RadiusResult:
    """Exact radius and one center via pivot bounds and candidate checks.

    Loop: pick the unexamined vertex with the smallest pivot-max bound,
    verify its true eccentricity (tightening the upper bound), and if the
    bounds have not met, add its farthest vertex as a new pivot. Candidates
    are never re-examined, so the loop ends after at most n verifications;
    if it runs out of candidates every eccentricity is known and the best
    seen is exact.
    """
    n = provider.n
    p1, p2 = far_pair(provider)
    state = PivotState.new(n)
    state.update_pivot_max(provider.row(p1))
    state.update_pivot_max(provider.row(p2))
    trace: list[tuple[float, float]] = []
    candidates = 0

    while True:
        picked = state.select_candidate()
        if picked is None:
            break
        c, _ = picked
        state.mark_examined(c)
        candidates += 1
        row = provider.row(c)
        ecc, far_v = eccentricity(row)
        if ecc < state.r_upper:
            state.r_upper = ecc
            state.best_center = c
        trace.append((state.r_lower, state.r_upper))
        if state.r_lower >= state.r_upper:
            break
        state.update_pivot_max(provider.row(far_v))

    return RadiusResult(
        radius=state.r_upper,
        center=state.best_center,
        pivots=list(state.pivots),
        candidates_examined=candidates,
        sssp_count=provider.sssp_count,
        rows_accessed=provider.rows_accessed,
        bound_trace=trace,
    )

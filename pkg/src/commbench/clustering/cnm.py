"""Greedy modularity agglomeration (Clauset-Newman-Moore style).

Starts from singleton communities and repeatedly merges the pair with
the largest modularity gain, maintained in a lazy max-heap; the merge
sequence is then cut at the step with maximal Q. Equal gains are broken
by the smallest (a, b) community-id pair.
"""

from __future__ import annotations

import heapq

import numpy as np

from ..graph import Graph
from .common import ClusteringError, ClusteringResult, finish


def _cnm_component(g: Graph, m_total: float) -> tuple[np.ndarray, bool]:
    n = g.n
    m = m_total
    inv2m2 = 1.0 / (2.0 * m * m)

    deg = [float(len(a)) for a in g.adj]
    # dq[a][b] = modularity gain of merging communities a and b (a != b)
    dq: list[dict[int, float]] = [dict() for _ in range(n)]
    for u, v in g.edges():
        gain = 1.0 / m - deg[u] * deg[v] * inv2m2
        dq[u][v] = gain
        dq[v][u] = gain

    heap: list[tuple[float, int, int]] = []
    for a in range(n):
        for b, gain in dq[a].items():
            if a < b:
                heap.append((-gain, a, b))
    heapq.heapify(heap)

    alive = [True] * n
    q = -sum((d / (2.0 * m)) ** 2 for d in deg)
    best_q = q
    best_step = 0
    merges: list[tuple[int, int]] = []

    while heap:
        neg_gain, a, b = heapq.heappop(heap)
        if not (alive[a] and alive[b]):
            continue
        cur = dq[a].get(b)
        if cur is None or -neg_gain != cur:
            continue  # stale entry

        # merge b into a (a < b by heap construction)
        q += cur
        merges.append((a, b))
        if q > best_q + 1e-12:
            best_q = q
            best_step = len(merges)

        nbrs = set(dq[a]) | set(dq[b])
        nbrs.discard(a)
        nbrs.discard(b)
        new_deg = deg[a] + deg[b]
        for k in nbrs:
            ga = dq[a].get(k, -deg[a] * deg[k] * inv2m2)
            gb = dq[b].get(k, -deg[b] * deg[k] * inv2m2)
            gain = ga + gb
            dq[a][k] = gain
            dq[k][a] = gain
            dq[k].pop(b, None)
            lo, hi = (a, k) if a < k else (k, a)
            heapq.heappush(heap, (-gain, lo, hi))
        dq[a].pop(b, None)
        dq[b] = {}
        deg[a] = new_deg
        alive[b] = False

    # replay merges up to the best step with union-find
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in merges[:best_step]:
        parent[find(b)] = find(a)

    labels = np.fromiter((find(u) for u in range(n)), dtype=np.int64, count=n)
    return labels, True


def fastgreedy_cnm(g: Graph) -> ClusteringResult:
    if g.edge_count == 0 and g.n > 1:
        raise ClusteringError("greedy modularity needs at least one edge")
    return finish(g, _cnm_component)

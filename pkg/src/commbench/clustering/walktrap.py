"""Random-walk agglomeration (Pons-Latapy style).

Each node is described by its t-step transition-probability vector
(self-loops added so short walks are well behaved). Communities are
merged bottom-up, Ward style: the adjacent pair with the smallest
degree-weighted squared distance between their averaged walk vectors is
merged first. Modularity is tracked along the merge sequence and the
cut with maximal Q is returned.

Walk vectors are dense numpy arrays on small graphs and dicts above
``DENSE_THRESHOLD`` nodes (the vectors are then sparse enough to win).
"""

from __future__ import annotations

import heapq

import numpy as np
from scipy import sparse

from ..graph import Graph
from .common import ClusteringError, ClusteringResult, finish

DEFAULT_WALK_LENGTH = 4
DENSE_THRESHOLD = 12000


def _dense_vectors(g: Graph, t: int) -> np.ndarray:
    """Rows of T^t for the lazy walk on A + I.

    The power is taken in sparse form (T^t stays sparse for short walks
    on sparse graphs) and densified once at the end.
    """
    adj = (g.to_sparse() + sparse.identity(g.n, format="csr")).tocsr()
    inv_d = 1.0 / np.asarray(adj.sum(axis=1)).ravel()
    transition = (sparse.diags(inv_d) @ adj).tocsr()
    power = transition
    for _ in range(t - 1):
        power = power @ transition
    return power.toarray()


def _sparse_vectors(g: Graph, t: int, inv_d: list[float]) -> list[dict[int, float]]:
    vecs: list[dict[int, float]] = []
    for u in range(g.n):
        vec = {u: 1.0}
        for _ in range(t):
            nxt: dict[int, float] = {}
            for x, p in vec.items():
                share = p * inv_d[x]
                nxt[x] = nxt.get(x, 0.0) + share  # self-loop
                for y in g.adj[x]:
                    nxt[y] = nxt.get(y, 0.0) + share
            vec = nxt
        vecs.append(vec)
    return vecs


def _walktrap_component(g: Graph, t: int, m_total: float) -> tuple[np.ndarray, bool]:
    n = g.n
    m = m_total
    inv_d = [1.0 / (len(a) + 1.0) for a in g.adj]  # lazy-walk degrees

    dense = n <= DENSE_THRESHOLD
    if dense:
        # scale columns by sqrt(1/d) so the degree-weighted distance is a
        # plain squared Euclidean one; cached norms turn each distance
        # into a single dot product
        mat = _dense_vectors(g, t)
        mat *= np.sqrt(np.array(inv_d))[np.newaxis, :]
        vecs: list = [mat[u] for u in range(n)]
        norms = [float(v @ v) for v in vecs]

        def dist2(a: int, b: int) -> float:
            return max(norms[a] + norms[b] - 2.0 * float(vecs[a] @ vecs[b]), 0.0)

        def merge_vec(a: int, b: int) -> None:
            vecs[a] = (size[a] * vecs[a] + size[b] * vecs[b]) / (size[a] + size[b])
            norms[a] = float(vecs[a] @ vecs[a])

    else:
        vecs = _sparse_vectors(g, t, inv_d)

        def dist2(a: int, b: int) -> float:
            va, vb = vecs[a], vecs[b]
            acc = 0.0
            for k, x in va.items():
                diff = x - vb.get(k, 0.0)
                acc += diff * diff * inv_d[k]
            for k, x in vb.items():
                if k not in va:
                    acc += x * x * inv_d[k]
            return acc

        def merge_vec(a: int, b: int) -> None:
            sa, sb = size[a], size[b]
            merged = {k: sa * x for k, x in vecs[a].items()}
            for k, x in vecs[b].items():
                merged[k] = merged.get(k, 0.0) + sb * x
            inv_s = 1.0 / (sa + sb)
            for k in merged:
                merged[k] *= inv_s
            vecs[a] = merged
            vecs[b] = None

    size = [1] * n
    # modularity bookkeeping uses the original (no self-loop) graph
    deg_tot = [float(len(a)) for a in g.adj]
    comm_adj: list[dict[int, float]] = [dict() for _ in range(n)]
    for u, v in g.edges():
        comm_adj[u][v] = comm_adj[u].get(v, 0.0) + 1.0
        comm_adj[v][u] = comm_adj[v].get(u, 0.0) + 1.0

    def ward_cost(a: int, b: int) -> float:
        sa, sb = size[a], size[b]
        return (sa * sb) / (sa + sb) / n * dist2(a, b)

    current: dict[tuple[int, int], float] = {}
    heap: list[tuple[float, int, int]] = []
    for a in range(n):
        for b in comm_adj[a]:
            if a < b:
                c = ward_cost(a, b)
                current[(a, b)] = c
                heap.append((c, a, b))
    heapq.heapify(heap)

    alive = [True] * n
    q = -sum((d / (2.0 * m)) ** 2 for d in deg_tot)
    best_q = q
    best_step = 0
    merges: list[tuple[int, int]] = []

    while heap:
        cost, a, b = heapq.heappop(heap)
        if not (alive[a] and alive[b]) or current.get((a, b)) != cost:
            continue  # stale entry

        # merge b into a
        w_ab = comm_adj[a].get(b, 0.0)
        q += w_ab / m - deg_tot[a] * deg_tot[b] / (2.0 * m * m)
        merges.append((a, b))
        if q > best_q + 1e-12:
            best_q = q
            best_step = len(merges)

        merge_vec(a, b)
        vecs[b] = None
        size[a] += size[b]
        deg_tot[a] += deg_tot[b]
        alive[b] = False

        for k in list(comm_adj[b]):
            w = comm_adj[b][k]
            if k != a:
                comm_adj[a][k] = comm_adj[a].get(k, 0.0) + w
            comm_adj[k].pop(b, None)
        comm_adj[a].pop(b, None)
        comm_adj[b] = {}
        for k in comm_adj[a]:
            lo, hi = (a, k) if a < k else (k, a)
            c = ward_cost(a, k)
            current[(lo, hi)] = c
            heapq.heappush(heap, (c, lo, hi))
            comm_adj[k][a] = comm_adj[a][k]

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


def walktrap(g: Graph, walk_length: int = DEFAULT_WALK_LENGTH) -> ClusteringResult:
    if walk_length < 1:
        raise ClusteringError("walk length must be >= 1")
    return finish(g, lambda sub, m_total: _walktrap_component(sub, walk_length, m_total))

"""Immutable undirected simple-graph representation and structural queries.

Nodes are dense zero-based integers. Every other module builds on the
``Graph`` type defined here; file formats with 1-based ids are handled by
the harness layer.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

import numpy as np
from scipy import sparse
from scipy.sparse import csgraph


class GraphError(ValueError):
    """Raised for structurally invalid graph input (self-loop, duplicate
    edge, endpoint out of range)."""


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph: ``n`` nodes, sorted adjacency lists.

    Construct through :func:`build_graph`, which validates the edge set.
    Instances are immutable and safe to share across threads/processes.
    """

    n: int
    adj: tuple[tuple[int, ...], ...]
    edge_count: int = field(default=0)

    def degree(self, u: int) -> int:
        return len(self.adj[u])

    def degrees(self) -> np.ndarray:
        return np.fromiter((len(a) for a in self.adj), dtype=np.int64, count=self.n)

    def edges(self):
        """Yield each undirected edge once, as (u, v) with u < v."""
        for u, nbrs in enumerate(self.adj):
            for v in nbrs:
                if u < v:
                    yield (u, v)

    def has_edge(self, u: int, v: int) -> bool:
        a = self.adj[u]
        # adjacency lists are sorted; binary search
        import bisect

        i = bisect.bisect_left(a, v)
        return i < len(a) and a[i] == v

    def to_sparse(self) -> sparse.csr_matrix:
        """Symmetric CSR adjacency matrix with unit weights."""
        rows = []
        cols = []
        for u, nbrs in enumerate(self.adj):
            rows.extend([u] * len(nbrs))
            cols.extend(nbrs)
        data = np.ones(len(rows), dtype=np.float64)
        return sparse.csr_matrix(
            (data, (np.array(rows, dtype=np.int64), np.array(cols, dtype=np.int64))),
            shape=(self.n, self.n),
        )


def build_graph(n: int, edges) -> Graph:
    """Build a validated simple graph from an iterable of node pairs.

    Rejects self-loops, duplicate edges (regardless of orientation) and
    endpoints outside ``[0, n)``.
    """
    if n < 0:
        raise GraphError("node count must be non-negative")
    adj: list[list[int]] = [[] for _ in range(n)]
    seen: set[tuple[int, int]] = set()
    m = 0
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge endpoint out of range: ({u}, {v}) with n={n}")
        if u == v:
            raise GraphError(f"self-loop at node {u}")
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise GraphError(f"duplicate edge ({key[0]}, {key[1]})")
        seen.add(key)
        adj[u].append(v)
        adj[v].append(u)
        m += 1
    return Graph(n=n, adj=tuple(tuple(sorted(a)) for a in adj), edge_count=m)


def subgraph(g: Graph, nodes: list[int]) -> tuple[Graph, list[int]]:
    """Induced subgraph on ``nodes``; returns (subgraph, original ids).

    Node i of the subgraph corresponds to ``nodes[i]`` in ``g``.
    """
    index = {u: i for i, u in enumerate(nodes)}
    edges = []
    for u in nodes:
        for v in g.adj[u]:
            if u < v and v in index:
                edges.append((index[u], index[v]))
    return build_graph(len(nodes), edges), list(nodes)


def connected_components(g: Graph) -> np.ndarray:
    """Label nodes by component; each label is the smallest node id in
    its component. Isolated nodes are their own singleton components."""
    labels = np.full(g.n, -1, dtype=np.int64)
    for start in range(g.n):
        if labels[start] != -1:
            continue
        labels[start] = start
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for v in g.adj[u]:
                if labels[v] == -1:
                    labels[v] = start
                    queue.append(v)
    return labels


def bfs_distances(g: Graph, source: int) -> np.ndarray:
    """Hop distances from ``source``; unreachable nodes get -1."""
    dist = np.full(g.n, -1, dtype=np.int64)
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        du = dist[u]
        for v in g.adj[u]:
            if dist[v] == -1:
                dist[v] = du + 1
                queue.append(v)
    return dist


@dataclass(frozen=True)
class PathLengthResult:
    """Mean shortest-path length plus bookkeeping on what was excluded."""

    value: float
    excluded_fraction: float
    exact: bool
    sources_used: int


# Below this node count the all-pairs computation is exact.
APL_EXACT_THRESHOLD = 2000


def average_path_length(
    g: Graph,
    sample_sources: int = 1000,
    seed: int = 0,
    exact_threshold: int = APL_EXACT_THRESHOLD,
) -> PathLengthResult:
    """Mean shortest-path length over reachable ordered pairs.

    Exact (all sources) when ``g.n <= exact_threshold``, otherwise averaged
    over BFS trees from ``sample_sources`` uniformly sampled sources.
    Unreachable pairs are excluded; their fraction is reported in the
    result. Raises :class:`GraphError` when no path exists at all.
    """
    if g.n < 2:
        raise GraphError("average path length needs at least 2 nodes")
    if g.edge_count == 0:
        raise GraphError("no paths: graph has no edges")

    exact = g.n <= exact_threshold or sample_sources >= g.n
    if exact:
        sources = np.arange(g.n)
    else:
        rng = np.random.default_rng(seed)
        sources = rng.choice(g.n, size=sample_sources, replace=False)

    adj = g.to_sparse()
    total = 0.0
    reachable = 0
    # chunk sources to bound the dense distance block in memory
    chunk = max(1, int(2e7 // max(g.n, 1)))
    for i in range(0, len(sources), chunk):
        idx = sources[i : i + chunk]
        dist = csgraph.dijkstra(adj, directed=False, unweighted=True, indices=idx)
        finite = np.isfinite(dist)
        positive = finite & (dist > 0)
        total += float(dist[positive].sum())
        reachable += int(positive.sum())

    considered = len(sources) * (g.n - 1)
    if reachable == 0:
        raise GraphError("no paths: all sampled pairs unreachable")
    return PathLengthResult(
        value=total / reachable,
        excluded_fraction=1.0 - reachable / considered,
        exact=exact,
        sources_used=len(sources),
    )


def clustering_coefficient(g: Graph) -> float:
    """Average local clustering coefficient; degree < 2 nodes contribute 0."""
    if g.n == 0:
        return 0.0
    nbr_sets = [set(a) for a in g.adj]
    total = 0.0
    for u in range(g.n):
        nbrs = g.adj[u]
        d = len(nbrs)
        if d < 2:
            continue
        links = 0
        for i in range(d):
            si = nbr_sets[nbrs[i]]
            for j in range(i + 1, d):
                if nbrs[j] in si:
                    links += 1
        total += 2.0 * links / (d * (d - 1))
    return total / g.n


def k_core_decomposition(g: Graph) -> tuple[np.ndarray, int]:
    """Core number per node via iterative min-degree peeling.

    Returns (core numbers, max core). Standard bucket-based peeling,
    O(n + m).
    """
    n = g.n
    degree = [len(a) for a in g.adj]
    if n == 0:
        return np.zeros(0, dtype=np.int64), 0
    max_deg = max(degree)
    buckets: list[list[int]] = [[] for _ in range(max_deg + 1)]
    for u, d in enumerate(degree):
        buckets[d].append(u)
    core = [0] * n
    removed = [False] * n
    current = 0
    for d in range(max_deg + 1):
        stack = buckets[d]
        while stack:
            u = stack.pop()
            if removed[u] or degree[u] > d:
                continue
            removed[u] = True
            current = max(current, degree[u])
            core[u] = current
            for v in g.adj[u]:
                if not removed[v] and degree[v] > d:
                    degree[v] -= 1
                    buckets[max(degree[v], d)].append(v)
    return np.array(core, dtype=np.int64), current

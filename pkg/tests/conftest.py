"""Shared test fixtures and independent oracles.

The oracles here deliberately use different formulations from the
package code (dense matrix arithmetic, dict-based BFS, exhaustive
enumeration) so agreement is meaningful evidence of correctness.
"""

from __future__ import annotations

import random
from collections import deque

import numpy as np
import pytest

from commbench import Graph, build_graph


def random_simple_graph(rnd: random.Random, n: int, p: float) -> Graph:
    """Erdos-Renyi style graph; guaranteed to have at least one edge."""
    edges = [
        (u, v) for u in range(n) for v in range(u + 1, n) if rnd.random() < p
    ]
    if not edges and n >= 2:
        edges = [(0, 1)]
    return build_graph(n, edges)


def oracle_modularity(g: Graph, labels) -> float:
    """Newman Q from the dense form: (1/2m) sum_ij (A_ij - d_i d_j / 2m)
    over same-community ordered pairs."""
    a = g.to_sparse().toarray()
    d = a.sum(axis=1)
    m = d.sum() / 2.0
    labels = np.asarray(labels)
    same = labels[:, None] == labels[None, :]
    b = a - np.outer(d, d) / (2.0 * m)
    return float(b[same].sum() / (2.0 * m))


def oracle_distances(adj: dict[int, list[int]], source: int) -> dict[int, int]:
    """Dict-based BFS independent of the package graph type."""
    dist = {source: 0}
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for v in adj[u]:
            if v not in dist:
                dist[v] = dist[u] + 1
                queue.append(v)
    return dist


def oracle_apl(g: Graph) -> tuple[float, float]:
    """(mean path length over reachable ordered pairs, excluded fraction)."""
    adj = {u: list(g.adj[u]) for u in range(g.n)}
    total = 0
    reachable = 0
    for s in range(g.n):
        dist = oracle_distances(adj, s)
        for v, d in dist.items():
            if v != s:
                total += d
                reachable += 1
    considered = g.n * (g.n - 1)
    if reachable == 0:
        raise ValueError("no reachable pairs")
    return total / reachable, 1.0 - reachable / considered


def set_partitions(items: list[int]):
    """All partitions of ``items`` (Bell-number enumeration)."""
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for smaller in set_partitions(rest):
        for i in range(len(smaller)):
            yield smaller[:i] + [smaller[i] + [first]] + smaller[i + 1 :]
        yield [[first]] + smaller


def blocks_to_labels(n: int, blocks: list[list[int]]) -> np.ndarray:
    labels = np.empty(n, dtype=np.int64)
    for i, block in enumerate(blocks):
        for u in block:
            labels[u] = i
    return labels


@pytest.fixture
def two_cliques() -> tuple[Graph, np.ndarray]:
    """Two 5-cliques joined by one bridge; the planted split is the
    unambiguous modularity optimum (Q = 19/42)."""
    edges = [(u, v) for u in range(5) for v in range(u + 1, 5)]
    edges += [(u, v) for u in range(5, 10) for v in range(u + 1, 10)]
    edges.append((0, 5))
    labels = np.array([0] * 5 + [1] * 5)
    return build_graph(10, edges), labels

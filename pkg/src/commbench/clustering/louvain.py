"""Multilevel local modularity optimization (Blondel et al. style).

Each level sweeps nodes in seeded random order, moving a node to the
neighboring community with the best modularity gain until a full sweep
improves Q by no more than a small threshold; communities are then
collapsed into supernodes and the process repeats. Final labels are
projected back to the original nodes.
"""

from __future__ import annotations

import random

import numpy as np

from ..graph import Graph
from .common import ClusteringError, ClusteringResult, finish

IMPROVEMENT_THRESHOLD = 1e-7


def _one_level(
    adj: list[dict[int, float]],
    loops: list[float],
    m2: float,
    rnd: random.Random,
) -> tuple[list[int], bool]:
    """One local-move phase. Returns (community per node, improved?)."""
    n = len(adj)
    degree = [sum(adj[u].values()) + 2.0 * loops[u] for u in range(n)]
    com = list(range(n))
    tot = list(degree)

    improved = False
    order = list(range(n))
    while True:
        rnd.shuffle(order)
        sweep_gain = 0.0
        for u in order:
            cu = com[u]
            du = degree[u]
            # weights from u to each neighboring community
            weights: dict[int, float] = {}
            for v, w in adj[u].items():
                weights[com[v]] = weights.get(com[v], 0.0) + w
            tot[cu] -= du
            w_own = weights.get(cu, 0.0)
            best_c, best_gain = cu, 0.0
            for c, w in weights.items():
                gain = (w - w_own) - du * (tot[c] - tot[cu]) / m2
                if gain > best_gain + 1e-12 or (
                    gain > best_gain - 1e-12 and c < best_c and gain > 0
                ):
                    best_c, best_gain = c, gain
            com[u] = best_c
            tot[best_c] += du
            if best_c != cu:
                sweep_gain += best_gain
        if sweep_gain * 2.0 / m2 > IMPROVEMENT_THRESHOLD:
            improved = True
        else:
            break
    return com, improved


def _aggregate(
    adj: list[dict[int, float]], loops: list[float], com: list[int]
) -> tuple[list[dict[int, float]], list[float], dict[int, int]]:
    """Collapse communities into supernodes."""
    ids = sorted(set(com))
    remap = {c: i for i, c in enumerate(ids)}
    k = len(ids)
    new_adj: list[dict[int, float]] = [dict() for _ in range(k)]
    new_loops = [0.0] * k
    for c, l in zip(com, loops):
        new_loops[remap[c]] += l
    for u, nbrs in enumerate(adj):
        cu = remap[com[u]]
        for v, w in nbrs.items():
            if u < v:
                cv = remap[com[v]]
                if cu == cv:
                    new_loops[cu] += w
                else:
                    new_adj[cu][cv] = new_adj[cu].get(cv, 0.0) + w
                    new_adj[cv][cu] = new_adj[cv].get(cu, 0.0) + w
    return new_adj, new_loops, remap


def _louvain_component(g: Graph, seed: int, m_total: float) -> tuple[np.ndarray, bool]:
    rnd = random.Random(seed)
    n = g.n
    adj: list[dict[int, float]] = [
        {v: 1.0 for v in nbrs} for nbrs in g.adj
    ]
    loops = [0.0] * n
    m2 = 2.0 * m_total

    node_to_super = list(range(n))
    while True:
        com, improved = _one_level(adj, loops, m2, rnd)
        if not improved:
            break
        adj, loops, remap = _aggregate(adj, loops, com)
        node_to_super = [remap[com[s]] for s in node_to_super]
        if len(adj) == 1:
            break

    return np.array(node_to_super, dtype=np.int64), True


def louvain(g: Graph, seed: int = 0) -> ClusteringResult:
    if g.edge_count == 0 and g.n > 1:
        raise ClusteringError("louvain needs at least one edge")
    return finish(g, lambda sub, m_total: _louvain_component(sub, seed, m_total))

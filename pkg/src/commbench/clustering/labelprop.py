"""Asynchronous label propagation (Raghavan et al. style).

Nodes start with unique labels and repeatedly adopt the most frequent
label among their neighbors, visited in seeded random order; frequency
ties are broken uniformly at random. The process stops when every node
already carries one of its neighbors' most frequent labels, or after a
sweep cap (the result is then flagged non-converged).
"""

from __future__ import annotations

import random
from collections import Counter

import numpy as np

from ..graph import Graph
from ..partition import Partition
from .common import ClusteringResult

MAX_SWEEPS = 100


def label_propagation(g: Graph, seed: int = 0) -> ClusteringResult:
    rnd = random.Random(seed)
    labels = list(range(g.n))
    order = [u for u in range(g.n) if g.adj[u]]  # isolated nodes never move

    converged = False
    for _ in range(MAX_SWEEPS):
        rnd.shuffle(order)
        stable = True
        for u in order:
            counts = Counter(labels[v] for v in g.adj[u])
            top = max(counts.values())
            winners = [lab for lab, c in counts.items() if c == top]
            if labels[u] in winners:
                continue
            stable = False
            labels[u] = winners[rnd.randrange(len(winners))] if len(winners) > 1 else winners[0]
        if stable:
            converged = True
            break

    return ClusteringResult(
        partition=Partition.from_labels(np.array(labels, dtype=np.int64)),
        converged=converged,
    )

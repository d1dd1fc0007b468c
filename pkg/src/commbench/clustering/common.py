"""Shared plumbing for the clustering algorithms."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..graph import Graph, connected_components, subgraph
from ..partition import Partition


class ClusteringError(ValueError):
    pass


@dataclass(frozen=True)
class ClusteringResult:
    partition: Partition
    converged: bool = True


def per_component(g: Graph, component_fn) -> tuple[np.ndarray, bool]:
    """Run ``component_fn(subgraph, m_total) -> (labels, converged)`` on
    each connected component and offset-merge the labels.

    ``m_total`` is the edge count of the whole graph: modularity is a
    global quantity, so the degree penalty inside a component must be
    normalized by the full graph's edge count, not the component's.

    Singleton components become singleton communities without invoking
    the algorithm (every method's math assumes at least one edge).
    """
    m_total = float(g.edge_count)
    comp = connected_components(g)
    groups: dict[int, list[int]] = {}
    for u, c in enumerate(comp.tolist()):
        groups.setdefault(c, []).append(u)

    labels = np.empty(g.n, dtype=np.int64)
    offset = 0
    converged = True
    for c in sorted(groups):
        nodes = groups[c]
        if len(nodes) == 1:
            labels[nodes[0]] = offset
            offset += 1
            continue
        sub, ids = subgraph(g, nodes)
        sub_labels, ok = component_fn(sub, m_total)
        converged = converged and ok
        for i, u in enumerate(ids):
            labels[u] = offset + int(sub_labels[i])
        offset += int(max(sub_labels)) + 1
    return labels, converged


def finish(g: Graph, component_fn) -> ClusteringResult:
    labels, converged = per_component(g, component_fn)
    return ClusteringResult(
        partition=Partition.from_labels(labels), converged=converged
    )

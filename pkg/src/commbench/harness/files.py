"""Edge-list and community-file serialization.

Edge files: one undirected edge per line, ``u<TAB>v`` with 1-based node
ids, written with u < v, LF line endings, no header. Community files:
``node<TAB>label`` with 1-based node ids and 1-based dense labels.
Round-tripping a network through these formats is the identity.
"""

from __future__ import annotations

import numpy as np

from ..graph import Graph, GraphError, build_graph
from ..partition import Partition


class FileFormatError(ValueError):
    pass


def write_edge_file(g: Graph, path) -> None:
    with open(path, "w", newline="\n") as fh:
        for u, v in g.edges():
            fh.write(f"{u + 1}\t{v + 1}\n")


def read_edge_file(path, n: int | None = None) -> Graph:
    """Parse an edge file. Node count defaults to the largest id seen;
    edges with u > v are accepted and normalized."""
    edges = []
    max_id = 0
    with open(path) as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.strip()
            if not line:
                continue
            parts = line.split()
            if len(parts) != 2:
                raise FileFormatError(f"{path}:{lineno}: expected two fields")
            try:
                u, v = int(parts[0]), int(parts[1])
            except ValueError:
                raise FileFormatError(f"{path}:{lineno}: non-integer node id") from None
            if u < 1 or v < 1:
                raise FileFormatError(f"{path}:{lineno}: node ids are 1-based")
            max_id = max(max_id, u, v)
            edges.append((min(u, v) - 1, max(u, v) - 1))
    count = n if n is not None else max_id
    try:
        return build_graph(count, edges)
    except GraphError as exc:
        raise FileFormatError(f"{path}: {exc}") from exc


def write_community_file(p: Partition, path) -> None:
    with open(path, "w", newline="\n") as fh:
        for node, label in enumerate(p.labels.tolist()):
            fh.write(f"{node + 1}\t{label + 1}\n")


def read_community_file(path, role: str = "ground-truth") -> Partition:
    assignments: dict[int, int] = {}
    with open(path) as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.strip()
            if not line:
                continue
            parts = line.split()
            if len(parts) != 2:
                raise FileFormatError(f"{path}:{lineno}: expected two fields")
            try:
                node, label = int(parts[0]), int(parts[1])
            except ValueError:
                raise FileFormatError(f"{path}:{lineno}: non-integer field") from None
            if node < 1 or label < 1:
                raise FileFormatError(f"{path}:{lineno}: ids and labels are 1-based")
            if node in assignments:
                raise FileFormatError(f"{path}:{lineno}: node {node} labeled twice")
            assignments[node] = label
    if not assignments:
        raise FileFormatError(f"{path}: empty community file")
    n = max(assignments)
    if set(assignments) != set(range(1, n + 1)):
        missing = sorted(set(range(1, n + 1)) - set(assignments))[:5]
        raise FileFormatError(f"{path}: nodes without labels, e.g. {missing}")
    labels = np.array([assignments[node] for node in range(1, n + 1)], dtype=np.int64)
    return Partition.from_labels(labels, role=role)

"""Partition scoring (NMI, modularity) and topology summaries.

The NMI follows the confusion-matrix form of Danon et al.; modularity is
the standard Newman Q; the topology summary covers node/edge counts,
clustering coefficient, average path length, a power-law tail fit of the
degree distribution, and k-core depth.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .graph import (
    Graph,
    GraphError,
    average_path_length,
    clustering_coefficient,
    k_core_decomposition,
)
from .partition import Partition


class MetricError(ValueError):
    pass


# ---------------------------------------------------------------------------
# partition similarity


@dataclass(frozen=True)
class ConfusionMatrix:
    """Community-overlap counts between two partitions of the same nodes."""

    counts: np.ndarray  # |A| x |B|

    @property
    def total(self) -> int:
        return int(self.counts.sum())

    @property
    def row_sums(self) -> np.ndarray:
        return self.counts.sum(axis=1)

    @property
    def col_sums(self) -> np.ndarray:
        return self.counts.sum(axis=0)


def confusion(a: Partition, b: Partition) -> ConfusionMatrix:
    if a.n != b.n:
        raise MetricError(f"partitions label different node sets: {a.n} vs {b.n}")
    counts = np.zeros((a.num_communities, b.num_communities), dtype=np.int64)
    np.add.at(counts, (a.labels, b.labels), 1)
    return ConfusionMatrix(counts=counts)


def nmi(a: Partition, b: Partition) -> float:
    """Normalized mutual information in [0, 1]; 1 means identical
    partitions, values near 0 mean independence.

    Uses the confusion-matrix form
    ``-2 sum_ij N_ij ln(N_ij N / (N_i. N_.j)) /
    [sum_i N_i. ln(N_i./N) + sum_j N_.j ln(N_.j/N)]``
    with 0*ln(0) = 0. When both partitions are single-cluster the ratio is
    0/0; we return 1 if they are identical and 0 otherwise.
    """
    cm = confusion(a, b)
    counts = cm.counts.astype(np.float64)
    total = float(cm.total)
    rows = cm.row_sums.astype(np.float64)
    cols = cm.col_sums.astype(np.float64)

    denom = float(
        np.sum(rows * np.log(rows / total)) + np.sum(cols * np.log(cols / total))
    )
    if denom == 0.0:
        # both partitions trivial (one community each, or one per node)
        return 1.0 if np.array_equal(a.labels, b.labels) else 0.0

    nz = counts > 0
    # a permutation-structured confusion matrix means the partitions are
    # identical up to relabeling; return exactly 1 instead of accumulating
    # rounding error in the log sums
    if np.all(nz.sum(axis=0) == 1) and np.all(nz.sum(axis=1) == 1):
        return 1.0

    ratio = counts[nz] * total / np.outer(rows, cols)[nz]
    numer = -2.0 * float(np.sum(counts[nz] * np.log(ratio)))
    value = numer / denom
    # clamp tiny numerical excursions
    return min(max(value, 0.0), 1.0)


# ---------------------------------------------------------------------------
# modularity


def modularity(g: Graph, p: Partition) -> float:
    """Newman modularity Q = sum_c [e_c/m - (d_c/2m)^2]."""
    if p.n != g.n:
        raise MetricError("partition does not label every node of the graph")
    m = g.edge_count
    if m == 0:
        raise MetricError("modularity undefined on an edgeless graph")
    k = p.num_communities
    intra = np.zeros(k, dtype=np.float64)
    labels = p.labels
    for u, v in g.edges():
        if labels[u] == labels[v]:
            intra[labels[u]] += 1.0
    deg_tot = np.zeros(k, dtype=np.float64)
    np.add.at(deg_tot, labels, g.degrees().astype(np.float64))
    return float(np.sum(intra / m - (deg_tot / (2.0 * m)) ** 2))


# ---------------------------------------------------------------------------
# degree-distribution tail fit


@dataclass(frozen=True)
class PowerLawFit:
    exponent: float
    kmin: int
    sample_size: int


def powerlaw_mle(degrees, kmin: int, min_samples: int = 100) -> PowerLawFit:
    """Continuous-approximation MLE for the tail exponent:
    gamma = 1 + n_tail / sum(ln(k_i / (kmin - 0.5))) over k_i >= kmin."""
    degrees = np.asarray(degrees, dtype=np.float64)
    tail = degrees[degrees >= kmin]
    if len(tail) < min_samples:
        raise MetricError(
            f"too few tail samples: {len(tail)} < {min_samples} at kmin={kmin}"
        )
    logs = np.log(tail / (kmin - 0.5))
    s = float(logs.sum())
    if s <= 0 or np.allclose(tail, tail[0]):
        raise MetricError("degenerate tail: all degrees equal, exponent diverges")
    return PowerLawFit(
        exponent=1.0 + len(tail) / s, kmin=kmin, sample_size=len(tail)
    )


# ---------------------------------------------------------------------------
# topology summary


@dataclass(frozen=True)
class NetworkSummary:
    """The metric suite reported by the ``summary`` command.

    ``apl`` is None for edgeless graphs; ``gamma`` is None when the tail
    fit is degenerate or under-sampled. ``cc`` is the average local
    clustering coefficient (degree < 2 nodes contribute 0).
    """

    nodes: int
    edges: int
    ratio: float
    cc: float
    apl: Optional[float]
    apl_excluded_fraction: Optional[float]
    gamma: Optional[float]
    max_degree: int
    degree_one: int
    max_core: int

    def as_dict(self) -> dict:
        return {
            "N": self.nodes,
            "E": self.edges,
            "R": self.ratio,
            "CC": self.cc,
            "APL": self.apl,
            "APL_excluded": self.apl_excluded_fraction,
            "gamma": self.gamma,
            "MaxD": self.max_degree,
            "D1": self.degree_one,
            "MaxK": self.max_core,
        }

    def as_line(self) -> str:
        def fmt(x):
            if x is None:
                return "NA"
            if isinstance(x, float):
                return f"{x:.4g}"
            return str(x)

        return " ".join(f"{k}={fmt(v)}" for k, v in self.as_dict().items())


def network_summary(
    g: Graph, apl_sources: int = 1000, seed: int = 0, gamma_kmin: Optional[int] = None
) -> NetworkSummary:
    degrees = g.degrees()
    apl = None
    excluded = None
    if g.n >= 2 and g.edge_count > 0:
        try:
            res = average_path_length(g, sample_sources=apl_sources, seed=seed)
            apl, excluded = res.value, res.excluded_fraction
        except GraphError:
            pass
    gamma = None
    if g.edge_count > 0:
        mean_deg = float(degrees.mean())
        kmin = gamma_kmin if gamma_kmin is not None else max(2, math.floor(mean_deg / 2))
        try:
            gamma = powerlaw_mle(degrees, kmin).exponent
        except MetricError:
            pass
    _, max_core = k_core_decomposition(g)
    return NetworkSummary(
        nodes=g.n,
        edges=g.edge_count,
        ratio=g.edge_count / g.n if g.n else 0.0,
        cc=clustering_coefficient(g),
        apl=apl,
        apl_excluded_fraction=excluded,
        gamma=gamma,
        max_degree=int(degrees.max()) if g.n else 0,
        degree_one=int((degrees == 1).sum()),
        max_core=max_core,
    )

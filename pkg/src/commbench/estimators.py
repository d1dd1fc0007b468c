"""Scikit-learn style wrappers around the clustering algorithms.

Each estimator accepts a :class:`~commbench.graph.Graph`, a symmetric
adjacency matrix (dense or scipy sparse) or an (m, 2) edge array in
``fit``/``fit_predict`` and exposes ``labels_`` afterwards, so the
algorithms compose with sklearn pipelines and model-selection helpers.
"""

from __future__ import annotations

import numpy as np
from scipy import sparse
from sklearn.base import BaseEstimator, ClusterMixin

from .clustering import fastgreedy_cnm, label_propagation, louvain, mcl, walktrap
from .graph import Graph, build_graph


def as_graph(X) -> Graph:
    """Coerce supported inputs to a validated :class:`Graph`.

    Accepts a Graph (returned as-is), a square symmetric adjacency matrix
    (nonzero entries become edges; the diagonal must be empty), or an
    (m, 2) integer edge array (node count inferred as max id + 1).
    """
    if isinstance(X, Graph):
        return X
    if sparse.issparse(X):
        coo = sparse.triu(X, k=1).tocoo()
        n = X.shape[0]
        if X.shape[0] != X.shape[1]:
            raise ValueError("adjacency matrix must be square")
        if (X != X.T).nnz != 0:
            raise ValueError("adjacency matrix must be symmetric")
        if X.diagonal().any():
            raise ValueError("adjacency diagonal must be zero (no self-loops)")
        return build_graph(n, zip(coo.row.tolist(), coo.col.tolist()))
    X = np.asarray(X)
    if X.ndim == 2 and X.shape[0] == X.shape[1] and X.shape[0] > 2:
        if not np.array_equal(X, X.T):
            raise ValueError("adjacency matrix must be symmetric")
        if np.diagonal(X).any():
            raise ValueError("adjacency diagonal must be zero (no self-loops)")
        rows, cols = np.nonzero(np.triu(X, k=1))
        return build_graph(X.shape[0], zip(rows.tolist(), cols.tolist()))
    if X.ndim == 2 and X.shape[1] == 2:
        if not np.issubdtype(X.dtype, np.integer):
            raise ValueError("edge arrays must be integer typed")
        n = int(X.max()) + 1 if len(X) else 0
        return build_graph(n, (tuple(e) for e in X.tolist()))
    raise ValueError(
        "expected a Graph, a square symmetric adjacency matrix, or an (m, 2) edge array"
    )


class _GraphClusterer(ClusterMixin, BaseEstimator):
    """Base: fit stores labels_, n_communities_ and converged_."""

    def fit(self, X, y=None):
        g = as_graph(X)
        result = self._run(g)
        self.labels_ = result.partition.labels
        self.n_communities_ = result.partition.num_communities
        self.converged_ = result.converged
        return self

    def fit_predict(self, X, y=None):
        return self.fit(X).labels_

    def _run(self, g: Graph):
        raise NotImplementedError


class FastGreedyCommunities(_GraphClusterer):
    """Greedy modularity agglomeration, dendrogram cut at maximal Q."""

    def _run(self, g):
        return fastgreedy_cnm(g)


class LouvainCommunities(_GraphClusterer):
    """Multilevel local modularity optimization."""

    def __init__(self, random_state: int = 0):
        self.random_state = random_state

    def _run(self, g):
        return louvain(g, seed=self.random_state)


class LabelPropagationCommunities(_GraphClusterer):
    """Asynchronous majority-label propagation."""

    def __init__(self, random_state: int = 0):
        self.random_state = random_state

    def _run(self, g):
        return label_propagation(g, seed=self.random_state)


class WalktrapCommunities(_GraphClusterer):
    """Random-walk distance agglomeration, cut at maximal Q."""

    def __init__(self, walk_length: int = 4):
        self.walk_length = walk_length

    def _run(self, g):
        return walktrap(g, walk_length=self.walk_length)


class MarkovClustering(_GraphClusterer):
    """Expansion/inflation stochastic flow clustering."""

    def __init__(self, inflation: float = 2.0, expansion: int = 2):
        self.inflation = inflation
        self.expansion = expansion

    def _run(self, g):
        return mcl(g, inflation=self.inflation, expansion=self.expansion)

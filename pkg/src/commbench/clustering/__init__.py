"""Community-detection algorithms.

Five methods spanning distinct algorithmic families: greedy modularity
agglomeration (``cnm``), multilevel local modularity optimization
(``louvain``), asynchronous label propagation (``lp``), random-walk
agglomeration (``walktrap``) and stochastic flow simulation (``mcl``).

Every algorithm maps a :class:`~commbench.graph.Graph` to a
:class:`~commbench.partition.Partition` without being told the number of
communities. Disconnected inputs are clustered per connected component
and the labels offset-merged.
"""

from __future__ import annotations

from ..graph import Graph
from .common import ClusteringError, ClusteringResult
from .cnm import fastgreedy_cnm
from .louvain import louvain
from .labelprop import label_propagation
from .walktrap import walktrap
from .mcl import mcl

__all__ = [
    "ClusteringError",
    "ClusteringResult",
    "fastgreedy_cnm",
    "louvain",
    "label_propagation",
    "walktrap",
    "mcl",
    "ALGORITHMS",
    "run_algorithm",
]


# CLI names -> (function, whether it takes a seed)
ALGORITHMS = {
    "cnm": (fastgreedy_cnm, False),
    "louvain": (louvain, True),
    "lp": (label_propagation, True),
    "walktrap": (walktrap, False),
    "mcl": (mcl, False),
}


def run_algorithm(name: str, g: Graph, seed: int = 0, **kwargs) -> ClusteringResult:
    """Run a registered algorithm by CLI name."""
    if name not in ALGORITHMS:
        raise ClusteringError(
            f"unknown algorithm {name!r}; available: {sorted(ALGORITHMS)}"
        )
    fn, seeded = ALGORITHMS[name]
    if seeded:
        return fn(g, seed=seed, **kwargs)
    return fn(g, **kwargs)

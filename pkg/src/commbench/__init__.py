"""commbench: synthetic community benchmarks and a topology-sensitivity
harness for graph clustering algorithms."""

from .graph import (
    Graph,
    GraphError,
    average_path_length,
    build_graph,
    clustering_coefficient,
    connected_components,
    k_core_decomposition,
)
from .partition import Partition
from .generators import (
    BAConfig,
    GNConfig,
    GeneratedNetwork,
    GeneratorError,
    LFRConfig,
    NSCConfig,
    generate_ba,
    generate_gn,
    generate_lfr_like,
    generate_nsc,
    sample_powerlaw_sequence,
)
from .clustering import (
    ALGORITHMS,
    ClusteringError,
    fastgreedy_cnm,
    label_propagation,
    louvain,
    mcl,
    run_algorithm,
    walktrap,
)
from .metrics import (
    ConfusionMatrix,
    MetricError,
    NetworkSummary,
    PowerLawFit,
    confusion,
    modularity,
    network_summary,
    nmi,
    powerlaw_mle,
)
from .estimators import (
    FastGreedyCommunities,
    LabelPropagationCommunities,
    LouvainCommunities,
    MarkovClustering,
    WalktrapCommunities,
    as_graph,
)

__version__ = "0.1.0"

import random

import numpy as np
import pytest

from commbench import (
    ALGORITHMS,
    ClusteringError,
    Partition,
    build_graph,
    fastgreedy_cnm,
    generate_gn,
    label_propagation,
    louvain,
    mcl,
    modularity,
    nmi,
    run_algorithm,
    walktrap,
)
import importlib

walktrap_mod = importlib.import_module("commbench.clustering.walktrap")
from commbench.generators import GNConfig

from conftest import random_simple_graph

ALL = sorted(ALGORITHMS)


def _labels_of(name, g, **kw):
    return run_algorithm(name, g, **kw).partition


# ---------------------------------------------------------------------------
# exact small cases, every algorithm


@pytest.mark.parametrize("name", ALL)
def test_two_cliques_split_exactly(two_cliques, name):
    g, truth = two_cliques
    p = _labels_of(name, g)
    assert nmi(p, Partition.from_labels(truth)) == 1.0
    assert modularity(g, p) == pytest.approx(19 / 42)


@pytest.mark.parametrize("name", ALL)
def test_clique_is_one_community(name):
    g = build_graph(6, [(u, v) for u in range(6) for v in range(u + 1, 6)])
    assert _labels_of(name, g).num_communities == 1


@pytest.mark.parametrize("name", ALL)
def test_disconnected_components_never_merge(name):
    # two triangles with no bridge plus an isolated node
    edges = [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]
    g = build_graph(7, edges)
    p = _labels_of(name, g)
    labels = p.labels
    assert labels[0] == labels[1] == labels[2]
    assert labels[3] == labels[4] == labels[5]
    assert labels[0] != labels[3]
    assert labels[6] not in (labels[0], labels[3])


@pytest.mark.parametrize("name", ALL)
def test_partition_is_canonical_and_complete(name):
    rnd = random.Random(17)
    for _ in range(5):
        g = random_simple_graph(rnd, rnd.randint(5, 40), 0.15)
        p = _labels_of(name, g)
        assert len(p.labels) == g.n
        seen = []
        for lab in p.labels.tolist():
            if lab not in seen:
                seen.append(lab)
        assert seen == list(range(p.num_communities))


@pytest.mark.parametrize("name", ALL)
def test_planted_partition_easy_regime(name):
    net = generate_gn(GNConfig(mu=0.1, seed=3))
    p = _labels_of(name, net.graph)
    assert nmi(p, net.ground_truth) >= 0.9


# ---------------------------------------------------------------------------
# determinism


@pytest.mark.parametrize("name", ALL)
def test_same_seed_same_result(name):
    rnd = random.Random(23)
    g = random_simple_graph(rnd, 60, 0.1)
    a = run_algorithm(name, g, seed=5)
    b = run_algorithm(name, g, seed=5)
    assert np.array_equal(a.partition.labels, b.partition.labels)
    assert a.converged == b.converged


# ---------------------------------------------------------------------------
# algorithm-specific behavior


def test_cnm_requires_an_edge():
    with pytest.raises(ClusteringError):
        fastgreedy_cnm(build_graph(3, []))


def test_label_propagation_reports_convergence():
    g = build_graph(4, [(0, 1), (2, 3)])
    res = label_propagation(g, seed=0)
    assert res.converged


def test_mcl_splits_two_triangles_through_weak_bridge():
    edges = [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (2, 3)]
    res = mcl(build_graph(6, edges))
    labels = res.partition.labels
    assert labels[0] == labels[1] == labels[2]
    assert labels[3] == labels[4] == labels[5]
    assert labels[0] != labels[3]


def test_mcl_parameter_validation():
    g = build_graph(3, [(0, 1), (1, 2)])
    with pytest.raises(ClusteringError):
        mcl(g, inflation=1.0)


def test_walktrap_parameter_validation():
    g = build_graph(3, [(0, 1), (1, 2)])
    with pytest.raises(ClusteringError):
        walktrap(g, walk_length=0)


def test_walktrap_dense_and_sparse_paths_agree(monkeypatch, two_cliques):
    g, _ = two_cliques
    dense = walktrap(g).partition.labels
    monkeypatch.setattr(walktrap_mod, "DENSE_THRESHOLD", 0)
    sparse = walktrap(g).partition.labels
    assert np.array_equal(dense, sparse)

    rnd = random.Random(31)
    for _ in range(5):
        h = random_simple_graph(rnd, 40, 0.12)
        monkeypatch.setattr(walktrap_mod, "DENSE_THRESHOLD", 10**6)
        d = walktrap(h).partition
        monkeypatch.setattr(walktrap_mod, "DENSE_THRESHOLD", 0)
        s = walktrap(h).partition
        # identical merge decisions up to numerical noise in costs
        assert nmi(d, s) >= 0.99


def test_run_algorithm_unknown_name():
    g = build_graph(3, [(0, 1)])
    with pytest.raises(ClusteringError, match="unknown algorithm"):
        run_algorithm("nope", g)


@pytest.mark.parametrize("name", ["cnm", "louvain"])
def test_modularity_methods_never_decrease_from_singletons(name):
    rnd = random.Random(41)
    for _ in range(10):
        g = random_simple_graph(rnd, 30, 0.15)
        p = _labels_of(name, g)
        q = modularity(g, p)
        q_singletons = modularity(g, Partition.from_labels(np.arange(g.n)))
        assert q >= q_singletons - 1e-12

import numpy as np
import pytest

from commbench import Partition
from commbench.harness.files import (
    FileFormatError,
    read_community_file,
    read_edge_file,
    write_community_file,
    write_edge_file,
)
from commbench.harness.plots import emit_plots
from commbench.harness.sweep import (
    DEFAULT_RANGES,
    SweepError,
    SweepSpec,
    aggregate,
    derive_seed,
    expand_grid,
    read_records_csv,
    run_sweep,
    scale_range,
    write_records_csv,
)

SMALL_SPEC = dict(
    models=("nsc", "lfr"),
    sizes=(200,),
    degrees=(4.0,),
    mixings=(0.3,),
    ranges=(("20-50", 20, 50),),
    algorithms=("louvain", "lp"),
    instances=2,
)


# ---------------------------------------------------------------------------
# file formats


def test_edge_file_roundtrip(tmp_path, two_cliques):
    g, _ = two_cliques
    path = tmp_path / "edges.tsv"
    write_edge_file(g, path)
    first = path.read_text().splitlines()[0]
    assert first == "1\t2"  # 1-based, u < v, tab separated
    assert read_edge_file(path).adj == g.adj


def test_edge_file_accepts_reversed_orientation(tmp_path):
    path = tmp_path / "edges.tsv"
    path.write_text("2\t1\n3\t1\n")
    g = read_edge_file(path)
    assert sorted(g.edges()) == [(0, 1), (0, 2)]


def test_edge_file_errors(tmp_path):
    bad = tmp_path / "bad.tsv"
    bad.write_text("1\t2\tx\n")
    with pytest.raises(FileFormatError, match=":1"):
        read_edge_file(bad)
    bad.write_text("1\tq\n")
    with pytest.raises(FileFormatError, match="non-integer"):
        read_edge_file(bad)
    bad.write_text("0\t1\n")
    with pytest.raises(FileFormatError, match="1-based"):
        read_edge_file(bad)
    bad.write_text("1\t2\n2\t1\n")
    with pytest.raises(FileFormatError, match="duplicate"):
        read_edge_file(bad)


def test_community_file_roundtrip(tmp_path):
    p = Partition.from_labels(np.array([0, 0, 1, 2, 1]))
    path = tmp_path / "comm.tsv"
    write_community_file(p, path)
    back = read_community_file(path)
    assert np.array_equal(back.labels, p.labels)


def test_community_file_errors(tmp_path):
    bad = tmp_path / "bad.tsv"
    bad.write_text("1\t1\n1\t2\n")
    with pytest.raises(FileFormatError, match="twice"):
        read_community_file(bad)
    bad.write_text("1\t1\n3\t1\n")
    with pytest.raises(FileFormatError, match="without labels"):
        read_community_file(bad)
    bad.write_text("")
    with pytest.raises(FileFormatError, match="empty"):
        read_community_file(bad)


# ---------------------------------------------------------------------------
# grid expansion and seeding


def test_default_grid_shape():
    spec = SweepSpec()
    grid = expand_grid(spec)
    per_model = {}
    for cfg in grid:
        per_model.setdefault(cfg.model, set()).add((cfg.n, cfg.k, cfg.mu, cfg.range_name))
    assert set(per_model) == {"nsc", "lfr"}
    assert all(len(v) == 81 for v in per_model.values())
    assert len(grid) == 2 * 81 * 5 * 5  # models x cells x instances x algorithms


def test_grid_order_is_stable():
    grid = expand_grid(SweepSpec(**SMALL_SPEC))
    assert [c.algorithm for c in grid[:4]] == ["louvain", "lp", "louvain", "lp"]
    assert grid[0].model == "nsc" and grid[-1].model == "lfr"


def test_derive_seed_is_stable_and_algorithm_independent():
    s = derive_seed(0, "nsc", 1000, 5.0, 0.5, "20-50", 0)
    assert s == derive_seed(0, "nsc", 1000, 5.0, 0.5, "20-50", 0)
    assert s != derive_seed(1, "nsc", 1000, 5.0, 0.5, "20-50", 0)
    assert s != derive_seed(0, "nsc", 1000, 5.0, 0.5, "20-50", 1)
    assert 0 <= s < 2**64


def test_scale_range():
    assert scale_range(20, 50, 1000) == (20, 50)
    assert scale_range(20, 50, 10_000) == (200, 500)
    assert scale_range(20, 50, 100) == (2, 5)
    assert DEFAULT_RANGES["200-300"] == (200, 300)


def test_spec_validation():
    with pytest.raises(SweepError):
        SweepSpec(models=("bogus",))
    with pytest.raises(SweepError):
        SweepSpec(algorithms=())
    with pytest.raises(SweepError):
        SweepSpec(instances=0)


def test_spec_from_json(tmp_path):
    path = tmp_path / "spec.json"
    path.write_text(
        '{"models": ["lfr"], "sizes": [300], "degrees": [5], "mixings": [0.2],'
        ' "ranges": {"20-50": [20, 50]}, "algorithms": ["lp"], "instances": 1,'
        ' "record_runtime": false}'
    )
    spec = SweepSpec.from_json(path)
    assert spec.models == ("lfr",)
    assert spec.ranges == (("20-50", 20, 50),)
    assert spec.record_runtime is False


# ---------------------------------------------------------------------------
# sweep execution


def test_small_sweep_end_to_end(tmp_path):
    spec = SweepSpec(**SMALL_SPEC)
    records = run_sweep(spec)
    assert len(records) == 2 * 2 * 2  # models x instances x algorithms
    assert all(r.converged in ("true", "false") for r in records)
    assert all(0.0 <= r.nmi <= 1.0 for r in records)
    assert all(r.communities_true >= 1 for r in records)

    path = tmp_path / "results.csv"
    write_records_csv(records, path)
    header = path.read_text().splitlines()[0]
    assert header == (
        "model,n,k,mu,range,instance,seed,algorithm,nmi,q,"
        "communities_true,communities_found,runtime_ms,converged"
    )
    df = read_records_csv(path)
    assert len(df) == len(records)
    assert df["nmi"].notna().all()


def test_sweep_mcl_cap_skips_rows():
    spec = SweepSpec(**{**SMALL_SPEC, "algorithms": ("lp", "mcl"), "mcl_size_cap": 100})
    records = run_sweep(spec)
    mcl_rows = [r for r in records if r.algorithm == "mcl"]
    assert mcl_rows and all(r.converged == "skipped" for r in mcl_rows)
    assert all(r.nmi is None for r in mcl_rows)
    lp_rows = [r for r in records if r.algorithm == "lp"]
    assert all(r.converged != "skipped" for r in lp_rows)


def test_sweep_generation_failure_yields_error_rows():
    # n=50 with the scaled 20-50 range leaves cmax=2, infeasible for k=10
    spec = SweepSpec(
        models=("lfr",),
        sizes=(50,),
        degrees=(10.0,),
        mixings=(0.2,),
        ranges=(("20-50", 20, 50),),
        algorithms=("lp",),
        instances=1,
    )
    records = run_sweep(spec)
    assert len(records) == 1
    assert records[0].converged == "error"
    assert records[0].nmi is None


def test_sweep_worker_pool_matches_serial():
    spec = SweepSpec(**{**SMALL_SPEC, "record_runtime": False})
    serial = run_sweep(spec, workers=1)
    parallel = run_sweep(spec, workers=2)
    assert [(r.seed, r.algorithm, r.nmi, r.q) for r in serial] == [
        (r.seed, r.algorithm, r.nmi, r.q) for r in parallel
    ]


def test_aggregate_means_and_completeness():
    spec = SweepSpec(**SMALL_SPEC)
    records = run_sweep(spec)
    table = aggregate(records, instances=spec.instances)
    assert len(table) == 2 * 2  # models x algorithms
    assert set(table.columns) >= {
        "model", "n", "k", "mu", "range", "algorithm",
        "nmi_mean", "nmi_std", "runs", "q_mean", "complete",
    }
    assert table["complete"].all()
    assert ((table["nmi_mean"] >= 0) & (table["nmi_mean"] <= 1)).all()

    # mean recomputed by hand for one cell
    cell = records[0]
    manual = np.mean(
        [r.nmi for r in records if r.model == cell.model and r.algorithm == cell.algorithm]
    )
    row = table[(table["model"] == cell.model) & (table["algorithm"] == cell.algorithm)]
    assert row["nmi_mean"].iloc[0] == pytest.approx(manual)


def test_emit_plots_writes_svg_files(tmp_path):
    spec = SweepSpec(**SMALL_SPEC)
    table = aggregate(run_sweep(spec), instances=spec.instances)
    paths = emit_plots(table, tmp_path / "plots")
    assert paths
    for p in paths:
        text = open(p).read()
        assert text.lstrip().startswith("<?xml")

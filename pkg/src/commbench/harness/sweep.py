"""Parameter-sweep experiment runner.

Expands a sweep specification into a deterministic grid of
(model, size, degree, mixing, cluster-size range, instance, algorithm)
runs, generates each network instance once, scores every algorithm
against the planted communities, and aggregates mean/std NMI per cell.
Per-run seeds are derived by stable hashing so results never depend on
execution order or on which algorithms are configured.
"""

from __future__ import annotations

import hashlib
import json
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np
import pandas as pd

from ..clustering import ALGORITHMS, run_algorithm
from ..generators import (
    GeneratedNetwork,
    GeneratorError,
    LFRConfig,
    NSCConfig,
    generate_lfr_like,
    generate_nsc,
)
from ..metrics import modularity, nmi

CSV_HEADER = (
    "model,n,k,mu,range,instance,seed,algorithm,nmi,q,"
    "communities_true,communities_found,runtime_ms,converged"
)

# cluster-size range bounds at n=1000; scaled linearly with n
DEFAULT_RANGES = {
    "20-50": (20, 50),
    "100-150": (100, 150),
    "200-300": (200, 300),
}

SEED_DOMAIN = "commbench-sweep-v1"


class SweepError(ValueError):
    pass


@dataclass(frozen=True)
class SweepSpec:
    models: tuple[str, ...] = ("nsc", "lfr")
    sizes: tuple[int, ...] = (10**3, 10**4, 10**5)
    degrees: tuple[float, ...] = (3.0, 5.0, 10.0)
    mixings: tuple[float, ...] = (0.2, 0.5, 0.8)
    ranges: tuple[tuple[str, int, int], ...] = tuple(
        (name, lo, hi) for name, (lo, hi) in DEFAULT_RANGES.items()
    )
    algorithms: tuple[str, ...] = ("cnm", "louvain", "lp", "walktrap", "mcl")
    instances: int = 5
    master_seed: int = 0
    mcl_size_cap: int = 10**4
    record_runtime: bool = True

    def __post_init__(self):
        for f in ("models", "sizes", "degrees", "mixings", "ranges", "algorithms"):
            object.__setattr__(self, f, tuple(getattr(self, f)))
        for dim in ("models", "sizes", "degrees", "mixings", "ranges", "algorithms"):
            if not getattr(self, dim):
                raise SweepError(f"empty sweep dimension: {dim}")
        for m in self.models:
            if m not in ("nsc", "lfr"):
                raise SweepError(f"unknown model {m!r}")
        for a in self.algorithms:
            if a not in ALGORITHMS:
                raise SweepError(f"unknown algorithm {a!r}")
        if self.instances < 1:
            raise SweepError("instances must be >= 1")

    @classmethod
    def from_json(cls, path) -> "SweepSpec":
        with open(path) as fh:
            raw = json.load(fh)
        kwargs = {}
        simple = {
            "models": "models",
            "sizes": "sizes",
            "degrees": "degrees",
            "mixings": "mixings",
            "algorithms": "algorithms",
            "instances": "instances",
            "master_seed": "master_seed",
            "mcl_size_cap": "mcl_size_cap",
            "record_runtime": "record_runtime",
        }
        for key, attr in simple.items():
            if key in raw:
                kwargs[attr] = raw[key]
        if "ranges" in raw:
            kwargs["ranges"] = tuple(
                (name, int(lo), int(hi)) for name, (lo, hi) in raw["ranges"].items()
            )
        return cls(**kwargs)


@dataclass(frozen=True)
class RunConfig:
    model: str
    n: int
    k: float
    mu: float
    range_name: str
    cmin: int
    cmax: int
    instance: int
    seed: int
    algorithm: str

    def network_key(self):
        return (self.model, self.n, self.k, self.mu, self.range_name, self.instance)


@dataclass
class RunRecord:
    model: str
    n: int
    k: float
    mu: float
    range_name: str
    instance: int
    seed: int
    algorithm: str
    nmi: float | None
    q: float | None
    communities_true: int | None
    communities_found: int | None
    runtime_ms: float
    converged: str  # "true" | "false" | "skipped" | "error"


def derive_seed(
    master_seed: int, model: str, n: int, k: float, mu: float, range_name: str, instance: int
) -> int:
    """Stable 64-bit per-network seed; independent of the algorithm list."""
    text = f"{SEED_DOMAIN}|{master_seed}|{model}|{n}|{k!r}|{mu!r}|{range_name}|{instance}"
    digest = hashlib.sha256(text.encode()).digest()
    return int.from_bytes(digest[:8], "little")


def scale_range(lo: int, hi: int, n: int) -> tuple[int, int]:
    """Range bounds are specified at n=1000 and scale linearly with n."""
    cmin = max(2, round(lo * n / 1000))
    cmax = max(cmin, round(hi * n / 1000))
    return cmin, cmax


def expand_grid(spec: SweepSpec) -> list[RunConfig]:
    out = []
    for model in spec.models:
        for n in spec.sizes:
            for k in spec.degrees:
                for mu in spec.mixings:
                    for name, lo, hi in spec.ranges:
                        cmin, cmax = scale_range(lo, hi, n)
                        for instance in range(spec.instances):
                            seed = derive_seed(
                                spec.master_seed, model, n, k, mu, name, instance
                            )
                            for algo in spec.algorithms:
                                out.append(
                                    RunConfig(
                                        model=model,
                                        n=n,
                                        k=k,
                                        mu=mu,
                                        range_name=name,
                                        cmin=cmin,
                                        cmax=cmax,
                                        instance=instance,
                                        seed=seed,
                                        algorithm=algo,
                                    )
                                )
    return out


# ---------------------------------------------------------------------------
# network construction per cell


def _uniform_sizes(n: int, cmin: int, cmax: int, rnd: random.Random) -> list[int]:
    for _ in range(10000):
        sizes: list[int] = []
        remaining = n
        ok = True
        redraws = 0
        while remaining > 0:
            if remaining <= cmax:
                if remaining >= cmin:
                    sizes.append(remaining)
                    remaining = 0
                    break
                ok = False
                break
            s = rnd.randint(cmin, cmax)
            if remaining - s != 0 and remaining - s < cmin:
                # a remainder in (cmax, cmin + cmax) cannot be finished;
                # bail out of this attempt instead of redrawing forever
                redraws += 1
                if redraws > 100:
                    ok = False
                    break
                continue
            sizes.append(s)
            remaining -= s
        if ok:
            return sizes
    raise GeneratorError(f"cannot split n={n} into sizes within [{cmin}, {cmax}]")


def build_network(cfg: RunConfig) -> GeneratedNetwork:
    if cfg.model == "nsc":
        rnd = random.Random(cfg.seed ^ 0xA5A5A5A5)
        cmin = max(cfg.cmin, int(cfg.k) + 1)
        cmax = max(cfg.cmax, cmin)
        sizes = _uniform_sizes(cfg.n, cmin, cmax, rnd)
        return generate_nsc(
            NSCConfig(
                community_sizes=tuple(sizes),
                avg_degree=cfg.k,
                mu=cfg.mu,
                seed=cfg.seed,
            )
        )
    if cfg.model == "lfr":
        return generate_lfr_like(
            LFRConfig(
                n=cfg.n,
                avg_degree=cfg.k,
                mu=cfg.mu,
                cmin=cfg.cmin,
                cmax=cfg.cmax,
                seed=cfg.seed,
            )
        )
    raise SweepError(f"unknown model {cfg.model!r}")


# ---------------------------------------------------------------------------
# execution


def _run_cell(args) -> list[RunRecord]:
    """Generate one network instance and run every algorithm on it."""
    cell_cfgs, mcl_size_cap, record_runtime = args
    first = cell_cfgs[0]
    records = []
    try:
        network = build_network(first)
    except Exception as exc:  # generation failure poisons the whole cell
        for cfg in cell_cfgs:
            records.append(_error_record(cfg, f"generation: {exc}"))
        return records

    truth = network.ground_truth
    for cfg in cell_cfgs:
        if cfg.algorithm == "mcl" and cfg.n > mcl_size_cap:
            records.append(
                RunRecord(
                    model=cfg.model,
                    n=cfg.n,
                    k=cfg.k,
                    mu=cfg.mu,
                    range_name=cfg.range_name,
                    instance=cfg.instance,
                    seed=cfg.seed,
                    algorithm=cfg.algorithm,
                    nmi=None,
                    q=None,
                    communities_true=truth.num_communities,
                    communities_found=None,
                    runtime_ms=0.0,
                    converged="skipped",
                )
            )
            continue
        start = time.perf_counter()
        try:
            result = run_algorithm(cfg.algorithm, network.graph, seed=cfg.seed)
            elapsed_ms = (time.perf_counter() - start) * 1000.0
            pred = result.partition
            records.append(
                RunRecord(
                    model=cfg.model,
                    n=cfg.n,
                    k=cfg.k,
                    mu=cfg.mu,
                    range_name=cfg.range_name,
                    instance=cfg.instance,
                    seed=cfg.seed,
                    algorithm=cfg.algorithm,
                    nmi=nmi(truth, pred),
                    q=modularity(network.graph, pred),
                    communities_true=truth.num_communities,
                    communities_found=pred.num_communities,
                    runtime_ms=elapsed_ms if record_runtime else 0.0,
                    converged="true" if result.converged else "false",
                )
            )
        except Exception as exc:
            records.append(_error_record(cfg, str(exc), truth.num_communities))
    return records


def _error_record(cfg: RunConfig, message: str, true_count=None) -> RunRecord:
    return RunRecord(
        model=cfg.model,
        n=cfg.n,
        k=cfg.k,
        mu=cfg.mu,
        range_name=cfg.range_name,
        instance=cfg.instance,
        seed=cfg.seed,
        algorithm=cfg.algorithm,
        nmi=None,
        q=None,
        communities_true=true_count,
        communities_found=None,
        runtime_ms=0.0,
        converged="error",
    )


def run_sweep(spec: SweepSpec, workers: int = 1) -> list[RunRecord]:
    """Execute the full grid; failures yield flagged rows, never aborts.

    Records come back in grid order regardless of scheduling.
    """
    grid = expand_grid(spec)
    cells: dict[tuple, list[RunConfig]] = {}
    for cfg in grid:
        cells.setdefault(cfg.network_key(), []).append(cfg)
    tasks = [
        (cfgs, spec.mcl_size_cap, spec.record_runtime) for cfgs in cells.values()
    ]

    if workers <= 1:
        batches = [_run_cell(t) for t in tasks]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            batches = list(pool.map(_run_cell, tasks))

    by_key: dict[tuple, RunRecord] = {}
    for batch in batches:
        for rec in batch:
            by_key[
                (rec.model, rec.n, rec.k, rec.mu, rec.range_name, rec.instance, rec.algorithm)
            ] = rec
    ordered = [
        by_key[(c.model, c.n, c.k, c.mu, c.range_name, c.instance, c.algorithm)]
        for c in grid
    ]
    return ordered


# ---------------------------------------------------------------------------
# CSV serialization


def _fmt(x) -> str:
    if x is None:
        return ""
    if isinstance(x, float):
        return f"{x:.10g}"
    return str(x)


def write_records_csv(records: list[RunRecord], path) -> None:
    with open(path, "w", newline="\n") as fh:
        fh.write(CSV_HEADER + "\n")
        for r in records:
            fh.write(
                ",".join(
                    [
                        r.model,
                        str(r.n),
                        _fmt(r.k),
                        _fmt(r.mu),
                        r.range_name,
                        str(r.instance),
                        str(r.seed),
                        r.algorithm,
                        _fmt(r.nmi),
                        _fmt(r.q),
                        _fmt(r.communities_true),
                        _fmt(r.communities_found),
                        f"{r.runtime_ms:.3f}",
                        r.converged,
                    ]
                )
                + "\n"
            )


def read_records_csv(path) -> pd.DataFrame:
    return pd.read_csv(path)


def records_frame(records: list[RunRecord]) -> pd.DataFrame:
    return pd.DataFrame(
        {
            "model": [r.model for r in records],
            "n": [r.n for r in records],
            "k": [r.k for r in records],
            "mu": [r.mu for r in records],
            "range": [r.range_name for r in records],
            "instance": [r.instance for r in records],
            "seed": [r.seed for r in records],
            "algorithm": [r.algorithm for r in records],
            "nmi": [r.nmi if r.nmi is not None else np.nan for r in records],
            "q": [r.q if r.q is not None else np.nan for r in records],
            "communities_true": [r.communities_true for r in records],
            "communities_found": [r.communities_found for r in records],
            "runtime_ms": [r.runtime_ms for r in records],
            "converged": [r.converged for r in records],
        }
    )


def aggregate(records, instances: int | None = None) -> pd.DataFrame:
    """Mean/sample-std NMI per (model, n, k, mu, range, algorithm).

    Accepts RunRecord lists or a DataFrame with the CSV columns. Cells
    with fewer successful runs than ``instances`` are flagged
    ``complete=False``.
    """
    df = records if isinstance(records, pd.DataFrame) else records_frame(records)
    df = df.rename(columns={"range_name": "range"})
    keys = ["model", "n", "k", "mu", "range", "algorithm"]
    grouped = df.groupby(keys, sort=False)["nmi"].agg(
        nmi_mean="mean", nmi_std="std", runs="count"
    )
    out = grouped.reset_index()
    qg = df.groupby(keys, sort=False)["q"].mean().reset_index(name="q_mean")
    out = out.merge(qg, on=keys)
    expected = instances if instances is not None else int(out["runs"].max() or 0)
    out["complete"] = out["runs"] >= expected
    return out

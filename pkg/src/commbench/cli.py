"""Command-line interface.

Verbs:

* ``gen``      generate a benchmark network (edge file + optional truth)
* ``cluster``  run one algorithm over an edge file
* ``eval``     NMI between a truth and a predicted community file
* ``summary``  topology metric record for an edge file
* ``sweep``    full parameter-grid experiment with CSV and SVG output

Exit codes: 0 success, 1 usage error, 2 data error, 3 sweep finished
with partial failures.
"""

from __future__ import annotations

import argparse
import json
import sys

from .clustering import ClusteringError, run_algorithm
from .generators import (
    BAConfig,
    GNConfig,
    GeneratorError,
    LFRConfig,
    NSCConfig,
    generate_ba,
    generate_gn,
    generate_lfr_like,
    generate_nsc,
)
from .harness.files import (
    FileFormatError,
    read_community_file,
    read_edge_file,
    write_community_file,
    write_edge_file,
)
from .harness.plots import emit_plots
from .harness.sweep import (
    SweepError,
    SweepSpec,
    aggregate,
    run_sweep,
    write_records_csv,
)
from .metrics import nmi, network_summary

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2
EXIT_PARTIAL = 3


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="commbench",
        description="Synthetic community benchmarks and clustering evaluation",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="generate a benchmark network")
    gen.add_argument("--model", required=True, choices=["nsc", "lfr", "ba", "gn"])
    gen.add_argument("--n", type=int)
    gen.add_argument("--k", type=float, help="target average degree")
    gen.add_argument("--mu", type=float, default=0.0, help="mixing parameter")
    gen.add_argument("--sizes", help="comma-separated community sizes (nsc)")
    gen.add_argument("--cmin", type=int, help="minimum community size (lfr)")
    gen.add_argument("--cmax", type=int, help="maximum community size (lfr)")
    gen.add_argument("--communities", type=int, default=4, help="groups (gn)")
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--out", required=True, help="edge file path")
    gen.add_argument("--truth", help="ground-truth community file path")

    clus = sub.add_parser("cluster", help="cluster an edge file")
    clus.add_argument("--algo", required=True, choices=["cnm", "louvain", "lp", "walktrap", "mcl"])
    clus.add_argument("--in", dest="infile", required=True)
    clus.add_argument("--out", required=True)
    clus.add_argument("--seed", type=int, default=0)
    clus.add_argument("--t", type=int, help="walk length (walktrap)")
    clus.add_argument("--inflation", type=float, help="inflation (mcl)")

    ev = sub.add_parser("eval", help="NMI between two community files")
    ev.add_argument("--truth", required=True)
    ev.add_argument("--pred", required=True)

    summ = sub.add_parser("summary", help="topology metrics for an edge file")
    summ.add_argument("--in", dest="infile", required=True)
    summ.add_argument("--json", action="store_true")

    sw = sub.add_parser("sweep", help="run a parameter-grid experiment")
    sw.add_argument("--spec", required=True, help="JSON sweep spec")
    sw.add_argument("--out", required=True, help="results CSV path")
    sw.add_argument("--plots", help="directory for SVG plots")
    sw.add_argument("--workers", type=int, default=1)

    return parser


def _cmd_gen(args) -> int:
    if args.model == "nsc":
        if args.sizes:
            sizes = tuple(int(s) for s in args.sizes.split(","))
        elif args.n and args.cmin and args.cmax:
            from .harness.sweep import _uniform_sizes
            import random as _random

            sizes = tuple(
                _uniform_sizes(args.n, args.cmin, args.cmax, _random.Random(args.seed))
            )
        else:
            print("gen nsc: need --sizes or --n with --cmin/--cmax", file=sys.stderr)
            return EXIT_USAGE
        if args.k is None:
            print("gen nsc: --k is required", file=sys.stderr)
            return EXIT_USAGE
        net = generate_nsc(NSCConfig(sizes, args.k, args.mu, seed=args.seed))
    elif args.model == "lfr":
        if not (args.n and args.k and args.cmin and args.cmax):
            print("gen lfr: need --n --k --cmin --cmax", file=sys.stderr)
            return EXIT_USAGE
        net = generate_lfr_like(
            LFRConfig(args.n, args.k, args.mu, args.cmin, args.cmax, seed=args.seed)
        )
    elif args.model == "ba":
        if not (args.n and args.k):
            print("gen ba: need --n --k", file=sys.stderr)
            return EXIT_USAGE
        graph = generate_ba(BAConfig(args.n, args.k, seed=args.seed))
        write_edge_file(graph, args.out)
        if args.truth:
            print("gen ba: no ground truth for the plain BA model", file=sys.stderr)
            return EXIT_USAGE
        return EXIT_OK
    else:  # gn
        net = generate_gn(
            GNConfig(
                n=args.n or 128,
                communities=args.communities,
                total_degree=args.k if args.k is not None else 16.0,
                mu=args.mu,
                seed=args.seed,
            )
        )
    write_edge_file(net.graph, args.out)
    if args.truth:
        write_community_file(net.ground_truth, args.truth)
    return EXIT_OK


def _cmd_cluster(args) -> int:
    g = read_edge_file(args.infile)
    kwargs = {}
    if args.algo == "walktrap" and args.t is not None:
        kwargs["walk_length"] = args.t
    if args.algo == "mcl" and args.inflation is not None:
        kwargs["inflation"] = args.inflation
    result = run_algorithm(args.algo, g, seed=args.seed, **kwargs)
    write_community_file(result.partition, args.out)
    if not result.converged:
        print("warning: non-converged result", file=sys.stderr)
    return EXIT_OK


def _cmd_eval(args) -> int:
    truth = read_community_file(args.truth, role="ground-truth")
    pred = read_community_file(args.pred, role="predicted")
    print(f"nmi={nmi(truth, pred):.6f}")
    return EXIT_OK


def _cmd_summary(args) -> int:
    g = read_edge_file(args.infile)
    summary = network_summary(g)
    if args.json:
        print(json.dumps(summary.as_dict()))
    else:
        print(summary.as_line())
        print(
            "# CC = average local clustering coefficient (degree<2 nodes count 0); "
            "APL excludes unreachable pairs (APL_excluded = excluded fraction)"
        )
    return EXIT_OK


def _cmd_sweep(args) -> int:
    spec = SweepSpec.from_json(args.spec)
    records = run_sweep(spec, workers=args.workers)
    write_records_csv(records, args.out)
    if args.plots:
        table = aggregate(records, instances=spec.instances)
        emit_plots(table, args.plots)
    if any(r.converged == "error" for r in records):
        return EXIT_PARTIAL
    return EXIT_OK


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK

    handlers = {
        "gen": _cmd_gen,
        "cluster": _cmd_cluster,
        "eval": _cmd_eval,
        "summary": _cmd_summary,
        "sweep": _cmd_sweep,
    }
    try:
        return handlers[args.command](args)
    except (FileFormatError, GeneratorError, ClusteringError, SweepError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA


if __name__ == "__main__":
    sys.exit(main())

"""Command-line surface: synth, knn-graph, cluster, eval, sweep.

Output is machine-readable JSON lines (one record per trial or sweep
point); sweeps can additionally emit CSV.  Exit codes: 0 success,
2 usage, 3 I/O, 4 numerical failure, 5 invalid graph or partition.
"""

from __future__ import annotations

import argparse
import csv as csvmod
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from importlib.metadata import version as pkg_version

import numpy as np

from ._errors import ConvergenceError, InvalidGraphError, InvalidPartitionError, RankError
from .elli import elli_cluster
from .graph import partition_profile
from .ingest import cosine_knn_graph, load_csv, load_vds
from .io import read_graph, read_labels, write_embedding, write_graph, write_labels
from .ksc import ksc_cluster
from .metrics import accuracy, nmi, timed
from .mvee import DEFAULT_EPS, DEFAULT_TAU_ACTIVE
from .synth import (
    conductance_bound,
    delta_sweep,
    standard_suites,
    synth_adjacency,
)

EXIT_USAGE = 2
EXIT_IO = 3
EXIT_NUMERICAL = 4
EXIT_INVALID_GRAPH = 5


def _parse_sizes(text):
    """'100x10' -> ten clusters of 100 nodes; terms separated by commas."""
    sizes = []
    for term in text.split(","):
        if "x" in term:
            size, count = term.split("x")
            sizes.extend([int(size)] * int(count))
        else:
            sizes.append(int(term))
    if not sizes or any(s < 1 for s in sizes):
        raise ValueError(f"bad --sizes value: {text!r}")
    return sizes


def _parse_deltas(text):
    vals = [float(v) for v in text.split(",")]
    if not vals:
        raise ValueError("empty --deltas")
    return vals


def _emit(records, json_path):
    lines = [json.dumps(r, sort_keys=True) for r in records]
    if json_path:
        with open(json_path, "w") as fh:
            fh.write("\n".join(lines) + "\n")
    else:
        for line in lines:
            print(line)


def _base_record(args, algo, k):
    return {
        "algo": algo,
        "k": k,
        "version": pkg_version("ellispec"),
        "seed": getattr(args, "seed", None),
    }


def _cmd_synth(args):
    sizes = _parse_sizes(args.sizes)
    inst = synth_adjacency(sizes, args.delta, np.random.default_rng(args.seed),
                           permute=args.permute)
    write_graph(inst.graph, args.out)
    if args.truth:
        write_labels(inst.truth, args.truth)
    record = _base_record(args, "synth", len(sizes))
    record.update({
        "delta": args.delta,
        "n": inst.graph.n,
        "c_min": inst.c_min,
        "bound": conductance_bound(inst.c_min, args.delta) if args.delta else 0.0,
        "sizes": args.sizes,
        "permute": args.permute,
    })
    _emit([record], args.json)
    return 0


def _cmd_knn_graph(args):
    if args.data.endswith(".vds"):
        data = load_vds(args.data, args.labels)
    else:
        data = load_csv(args.data, args.labels)
    graph = cosine_knn_graph(data, args.p)
    write_graph(graph, args.out)
    record = {"algo": "knn-graph", "n": graph.n, "p": args.p,
              "version": pkg_version("ellispec")}
    _emit([record], args.json)
    return 0


def _attach_truth_metrics(record, partition, truth):
    if truth is not None:
        record["ac"] = accuracy(partition, truth)
        record["nmi"] = nmi(partition, truth)


def _cmd_cluster(args):
    graph = read_graph(args.graph)
    truth = read_labels(args.truth) if args.truth else None
    if args.dump_embedding:
        from .eigen import bottom_k_eigs
        from .graph import normalized_laplacian
        write_embedding(bottom_k_eigs(normalized_laplacian(graph), args.k),
                        args.dump_embedding)

    records = []
    if args.algo == "elli":
        result, elapsed = timed(
            elli_cluster, graph, args.k,
            mvee_eps=args.mvee_eps, tau_active=args.tau_active,
        )
        profile = partition_profile(graph, result.partition)
        record = _base_record(args, "elli", args.k)
        record.update({
            "mcc": profile["mcc"],
            "sum_conductance": profile["sum"],
            "lambda_next": result.lambda_next,
            "elapsed_s": elapsed,
            "active_count": result.active_count,
            "spa_fallback": result.spa_fallback,
            "tau_active": args.tau_active,
            "mvee_eps": args.mvee_eps,
        })
        _attach_truth_metrics(record, result.partition, truth)
        records.append(record)
        best = result.partition
    else:
        runs, elapsed = timed(
            ksc_cluster, graph, args.k, trials=args.trials, seed=args.seed,
        )
        for t, run in enumerate(runs):
            record = _base_record(args, "ksc", args.k)
            record.update({
                "trial": t,
                "mcc": partition_profile(graph, run.partition)["mcc"],
                "sum_conductance": partition_profile(graph, run.partition)["sum"],
                "lambda_next": run.lambda_next,
                "cost": run.cost,
                "iterations": run.iterations,
                "elapsed_s": run.elapsed_s,
            })
            _attach_truth_metrics(record, run.partition, truth)
            records.append(record)
        # labels on disk = the lowest-cost trial (first on ties)
        best = min(runs, key=lambda r: r.cost).partition
    if args.out:
        write_labels(best, args.out)
    _emit(records, args.json)
    return 0


def _cmd_eval(args):
    labels = read_labels(args.labels)
    truth = read_labels(args.truth)
    record = {"algo": "eval", "k": labels.k,
              "version": pkg_version("ellispec"),
              "ac": accuracy(labels, truth),
              "nmi": nmi(labels, truth)}
    if args.graph:
        graph = read_graph(args.graph)
        profile = partition_profile(graph, labels)
        record["mcc"] = profile["mcc"]
        record["sum_conductance"] = profile["sum"]
    _emit([record], args.json)
    return 0


def _sweep_point(inst, algos, trials, seed):
    from .graph import partition_profile

    row = {
        "delta": inst.delta,
        "bound": conductance_bound(inst.c_min, inst.delta),
    }
    if "elli" in algos:
        result, elapsed = timed(elli_cluster, inst.graph, inst.truth.k)
        profile = partition_profile(inst.graph, result.partition)
        row["elli_mcc"] = profile["mcc"]
        row["elli_ac"] = accuracy(result.partition, inst.truth)
        row["elli_elapsed_s"] = elapsed
    if "ksc" in algos:
        runs, elapsed = timed(
            ksc_cluster, inst.graph, inst.truth.k, trials=trials, seed=seed,
        )
        mccs = [partition_profile(inst.graph, r.partition)["mcc"] for r in runs]
        acs = [accuracy(r.partition, inst.truth) for r in runs]
        row["ksc_mcc_mean"] = float(np.mean(mccs))
        row["ksc_mcc_min"] = float(np.min(mccs))
        row["ksc_mcc_max"] = float(np.max(mccs))
        row["ksc_ac_mean"] = float(np.mean(acs))
        row["ksc_elapsed_s"] = elapsed
    return row


def _cmd_sweep(args):
    if args.suite:
        sizes = standard_suites()[args.suite]
    elif args.sizes:
        sizes = _parse_sizes(args.sizes)
    else:
        raise ValueError("sweep needs --suite or --sizes")
    algos = args.algos.split(",")
    deltas = _parse_deltas(args.deltas) if args.deltas else None
    instances = list(
        delta_sweep(sizes, seed=args.seed)
        if deltas is None else delta_sweep(sizes, deltas, seed=args.seed)
    )
    threads = args.threads or int(os.environ.get("ELLISPEC_THREADS", "0")) \
        or (os.cpu_count() or 1)
    with ThreadPoolExecutor(max_workers=threads) as pool:
        rows = list(pool.map(
            lambda inst: _sweep_point(inst, algos, args.trials, args.seed),
            instances,
        ))
    records = []
    for row in rows:
        record = {"algo": "sweep", "k": len(sizes), "seed": args.seed,
                  "trials": args.trials, "version": pkg_version("ellispec")}
        record.update(row)
        records.append(record)
    _emit(records, args.json)
    if args.csv:
        fields = ["delta", "bound", "elli_mcc", "ksc_mcc_mean", "ksc_mcc_min",
                  "ksc_mcc_max", "elli_ac", "ksc_ac_mean"]
        fields = [f for f in fields if any(f in r for r in rows)]
        with open(args.csv, "w", newline="") as fh:
            writer = csvmod.DictWriter(fh, fieldnames=fields, extrasaction="ignore")
            writer.writeheader()
            for row in rows:
                writer.writerow(row)
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="ellispec",
        description="Graph clustering via an ellipsoid-based grouping stage, "
                    "with a k-means spectral baseline and conductance metrics.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("synth", help="generate a synthetic benchmark graph")
    p.add_argument("--sizes", required=True,
                   help="cluster sizes, e.g. 100x10 or 1000x3,50x140")
    p.add_argument("--delta", type=float, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--permute", action="store_true",
                   help="shuffle node ids (truth follows)")
    p.add_argument("--out", required=True, help="adjacency output (.mtx)")
    p.add_argument("--truth", help="ground-truth label output")
    p.add_argument("--json", help="write the run record here instead of stdout")
    p.set_defaults(func=_cmd_synth)

    p = sub.add_parser("knn-graph",
                       help="cosine-similarity p-nearest-neighbor graph")
    p.add_argument("--data", required=True, help="CSV or .vds feature vectors")
    p.add_argument("--labels", help="optional sidecar label file")
    p.add_argument("--p", type=int, required=True, help="neighbor size")
    p.add_argument("--out", required=True)
    p.add_argument("--json")
    p.set_defaults(func=_cmd_knn_graph)

    p = sub.add_parser("cluster", help="cluster a graph")
    p.add_argument("--algo", choices=["elli", "ksc"], required=True)
    p.add_argument("--graph", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--tau-active", type=float, default=DEFAULT_TAU_ACTIVE)
    p.add_argument("--mvee-eps", type=float, default=DEFAULT_EPS)
    p.add_argument("--trials", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--truth", help="if given, records include ac and nmi")
    p.add_argument("--out", help="label output file")
    p.add_argument("--json")
    p.add_argument("--dump-embedding", help="debug dump of P and eigenvalues")
    p.set_defaults(func=_cmd_cluster)

    p = sub.add_parser("eval", help="score labels against ground truth")
    p.add_argument("--labels", required=True)
    p.add_argument("--truth", required=True)
    p.add_argument("--graph", help="if given, records include mcc")
    p.add_argument("--json")
    p.set_defaults(func=_cmd_eval)

    p = sub.add_parser("sweep", help="delta sweep over a synthetic suite")
    p.add_argument("--suite", choices=sorted(standard_suites()))
    p.add_argument("--sizes")
    p.add_argument("--algos", default="elli,ksc")
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--deltas", help="comma-separated values, default 0..2 step 0.1")
    p.add_argument("--threads", type=int, default=0,
                   help="worker pool size (0 = ELLISPEC_THREADS or cores)")
    p.add_argument("--csv")
    p.add_argument("--json")
    p.set_defaults(func=_cmd_sweep)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (InvalidGraphError, InvalidPartitionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID_GRAPH
    except (ConvergenceError, RankError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

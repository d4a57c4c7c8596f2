"""Command-line entry point: ingest, reduce, eval, sweep, fit, recommend.

Exit codes: 0 success, 2 usage error, 1 runtime error.  All diagnostics
go to stderr; results go to files or stdout.  Output files are written
to a temp file and renamed, so failures never leave partial output.
"""

from __future__ import annotations

import argparse
import json
import sys

from .core import _atomic_write, load_vectors, save_vectors, sniff_format
from .errors import OpdrError
from .fit import FitResult, fit_law, recommend_dim
from .harness import SweepConfig, read_records_csv, run_sweep, write_records_csv
from .knn import knn_table
from .metrics import Metric
from .opm import accuracy
from .reduce import Method, ReducerConfig, reduce


def _load_auto(path):
    return load_vectors(path, sniff_format(path))


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="opdr",
        description="KNN-preservation analysis for dimension-reduction maps",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("ingest", help="convert a vector file to OPDR-VEC binary")
    p.add_argument("--format", choices=["csv", "binary"], required=True,
                   help="format of the input file")
    p.add_argument("input")
    p.add_argument("output")

    p = sub.add_parser("reduce", help="reduce a vector file to N dimensions")
    p.add_argument("--method", choices=[m.value for m in Method], default="pca",
                   help="reduction method (default: pca)")
    p.add_argument("--dim", type=int, required=True, help="target dimension")
    p.add_argument("--metric", choices=[m.value for m in Metric], default="l2",
                   help="distance metric, used by MDS only (default: l2)")
    p.add_argument("input")
    p.add_argument("output")

    p = sub.add_parser("eval", help="KNN-preservation accuracy of Y against X")
    p.add_argument("--k", type=int, default=5, help="neighborhood size (default: 5)")
    p.add_argument("--metric", choices=[m.value for m in Metric], default="l2",
                   help="distance metric for both spaces (default: l2)")
    p.add_argument("x", help="original-space vector file")
    p.add_argument("y", help="reduced-space vector file")

    p = sub.add_parser("sweep", help="accuracy grid over subsample sizes and dims")
    p.add_argument("--k", type=int, default=5, help="neighborhood size (default: 5)")
    p.add_argument("--metric", choices=[m.value for m in Metric], default="l2",
                   help="distance metric (default: l2)")
    p.add_argument("--method", choices=[m.value for m in Method], default="pca",
                   help="reduction method (default: pca)")
    p.add_argument("--sizes", default="10,20,30,40,50,60,70,80",
                   help="comma-separated subsample sizes (default: 10,20,...,80)")
    p.add_argument("--dims", default="all",
                   help="'all' or a comma-separated list of target dims (default: all)")
    p.add_argument("--seed", type=int, default=0, help="subsampling seed (default: 0)")
    p.add_argument("--repeats", type=int, default=1,
                   help="independent subsample draws per size (default: 1)")
    p.add_argument("--threads", type=int, default=None,
                   help="parallel sweep cells (default: available cores)")
    p.add_argument("input")
    p.add_argument("output", help="output CSV, the input to 'opdr fit'")

    p = sub.add_parser("fit", help="fit accuracy = c0*ln(n/m) + c1 to a sweep CSV")
    p.add_argument("input")
    p.add_argument("-o", "--output", default=None, help="write JSON here (default: stdout)")

    p = sub.add_parser("recommend", help="minimal dimension for a target accuracy")
    p.add_argument("--fit", required=True, help="fit JSON from 'opdr fit'")
    p.add_argument("--accuracy", type=float, required=True, help="target accuracy in (0,1]")
    p.add_argument("--m", type=int, required=True, help="number of points")
    p.add_argument("--max-dim", type=int, required=True, help="original dimension")

    return parser


def _cmd_ingest(args) -> int:
    vs = load_vectors(args.input, args.format)
    save_vectors(vs, args.output, "binary")
    return 0


def _cmd_reduce(args) -> int:
    vs = _load_auto(args.input)
    cfg = ReducerConfig(Method(args.method), args.dim, Metric(args.metric))
    result = reduce(vs, cfg)
    save_vectors(result.y, args.output, "binary")
    return 0


def _cmd_eval(args) -> int:
    metric = Metric(args.metric)
    x = _load_auto(args.x)
    y = _load_auto(args.y)
    report = accuracy(knn_table(x, args.k, metric), knn_table(y, args.k, metric))
    json.dump(
        {
            "k": report.k,
            "metric": metric.value,
            "accuracy": report.accuracy,
            "is_op_k": report.is_op_k,
            "per_point": list(report.per_point),
        },
        sys.stdout,
    )
    sys.stdout.write("\n")
    return 0


def _cmd_sweep(args) -> int:
    x = _load_auto(args.input)
    dims = None if args.dims == "all" else tuple(int(v) for v in args.dims.split(","))
    cfg = SweepConfig(
        sample_sizes=tuple(int(v) for v in args.sizes.split(",")),
        dims=dims,
        k=args.k,
        metric=Metric(args.metric),
        method=Method(args.method),
        seed=args.seed,
        repeats=args.repeats,
    )
    records = run_sweep(x, cfg, threads=args.threads)
    _atomic_write(
        args.output,
        lambda f: write_records_csv(records, f, seed=args.seed, dataset=args.input),
        "w",
    )
    return 0


def _cmd_fit(args) -> int:
    with open(args.input) as f:
        samples = read_records_csv(f)
    result = fit_law(samples)
    payload = {
        "c0": result.c0,
        "c1": result.c1,
        "r_squared": result.r_squared,
        "n_points": result.n_points,
    }
    if args.output:
        _atomic_write(args.output, lambda f: json.dump(payload, f), "w")
    else:
        json.dump(payload, sys.stdout)
        sys.stdout.write("\n")
    return 0


def _cmd_recommend(args) -> int:
    with open(args.fit) as f:
        data = json.load(f)
    fit = FitResult(
        c0=data["c0"], c1=data["c1"],
        r_squared=data.get("r_squared", float("nan")),
        n_points=data.get("n_points", 0),
    )
    rec = recommend_dim(fit, args.accuracy, args.m, args.max_dim)
    json.dump(
        {
            "target_accuracy": rec.target_accuracy,
            "m": rec.m,
            "recommended_dim": rec.recommended_dim,
            "clamped": rec.clamped,
        },
        sys.stdout,
    )
    sys.stdout.write("\n")
    return 0


_COMMANDS = {
    "ingest": _cmd_ingest,
    "reduce": _cmd_reduce,
    "eval": _cmd_eval,
    "sweep": _cmd_sweep,
    "fit": _cmd_fit,
    "recommend": _cmd_recommend,
}


def _validate(parser, args) -> None:
    # flag validation happens before any file is opened or written
    if getattr(args, "dim", 1) < 1:
        parser.error("--dim must be a positive integer")
    if getattr(args, "k", 1) < 1:
        parser.error("--k must be a positive integer")
    if getattr(args, "repeats", 1) < 1:
        parser.error("--repeats must be a positive integer")
    acc = getattr(args, "accuracy", 0.5)
    if not 0 < acc <= 1:
        parser.error("--accuracy must be in (0, 1]")


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    _validate(parser, args)
    try:
        return _COMMANDS[args.subcommand](args)
    except (OpdrError, OSError, ValueError) as exc:
        print(f"opdr {args.subcommand}: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

"""Command-line surface: stream generation, training with resume, labeling,
evaluation, and JSON model persistence."""

import argparse
import json
import sys

import numpy as np

from . import datagen
from .learner import ActiveNodeSet, DeletedEdgeStats, StreamClusterer
from .metrics import ari, nmi
from .network import Node

FORMAT_VERSION = 1


# -- model persistence ------------------------------------------------------

def state_to_dict(learner):
    net = learner.net
    return {
        "format_version": FORMAT_VERSION,
        "dimension": learner.dimension,
        "lambda": learner.lam,
        "v_threshold": learner.v_threshold,
        "presented_count": learner.presented_count,
        "next_id": net.next_id,
        "nodes": [
            {"id": n.id, "weight": [float(v) for v in n.weight],
             "win_count": n.win_count, "sigma": n.sigma}
            for n in net.nodes.values()
        ],
        "edges": [[k, l, age] for (k, l, age) in net.edges()],
        "active": None if learner.active is None else list(learner.active.entries),
        "active_capacity": None if learner.active is None else learner.active.capacity,
        "deleted_edges": {"count": learner.deleted_stats.count,
                          "mean_age": learner.deleted_stats.mean_age},
    }


def state_from_dict(data):
    if data.get("format_version") != FORMAT_VERSION:
        raise ValueError(f"unsupported model format {data.get('format_version')!r}")
    learner = StreamClusterer(dimension=data["dimension"])
    learner.lam = data["lambda"]
    learner.v_threshold = data["v_threshold"]
    learner.presented_count = data["presented_count"]
    net = learner.net
    for n in data["nodes"]:
        net.nodes[n["id"]] = Node(id=n["id"], weight=np.array(n["weight"]),
                                  win_count=n["win_count"], sigma=n["sigma"])
        net._adj[n["id"]] = set()
    net.next_id = data["next_id"]
    for k, l, age in data["edges"]:
        learner.net.set_edge(k, l)
        learner.net._ages[learner.net._key(k, l)] = age
    if data["active"] is not None:
        learner.active = ActiveNodeSet(data["active_capacity"])
        learner.active.entries = list(data["active"])
    stats = data["deleted_edges"]
    learner.deleted_stats = DeletedEdgeStats(stats["count"], stats["mean_age"])
    return learner


def save_model(learner, path):
    with open(path, "w") as fh:
        json.dump(state_to_dict(learner), fh)
        fh.write("\n")


def load_model(path):
    with open(path) as fh:
        return state_from_dict(json.load(fh))


# -- CSV helpers ------------------------------------------------------------

class DataError(Exception):
    pass


def read_csv(path, header=False, labeled=False):
    """Parse a CSV of float rows; returns (points, labels-or-None)."""
    rows = []
    with open(path) as fh:
        lines = fh.read().splitlines()
    if header:
        lines = lines[1:]
    for i, line in enumerate(lines):
        if not line.strip():
            continue
        fields = line.split(",")
        try:
            rows.append([float(f) for f in fields])
        except ValueError:
            raise DataError(f"non-numeric field on line {i + 1}: {line!r}")
    if not rows:
        return np.empty((0, 0)), None
    width = len(rows[0])
    if any(len(r) != width for r in rows):
        raise DataError("ragged rows in CSV")
    data = np.array(rows)
    if not np.isfinite(data).all():
        raise DataError("non-finite value in CSV")
    if labeled:
        if width < 2:
            raise DataError("--labeled requires at least 2 columns")
        return data[:, :-1], data[:, -1].astype(int)
    return data, None


def write_csv(path, points, labels=None):
    with open(path, "w") as fh:
        for i, row in enumerate(points):
            fields = [repr(float(v)) for v in row]
            if labels is not None:
                fields.append(str(int(labels[i])))
            fh.write(",".join(fields) + "\n")


def _minmax(points):
    lo = points.min(axis=0)
    span = points.max(axis=0) - lo
    span[span == 0] = 1.0
    return (points - lo) / span


# -- subcommands ------------------------------------------------------------

def cmd_gen(args):
    if args.component:
        comps = []
        for text in args.component:
            parts = text.split(",")
            if len(parts) < 5:
                raise DataError(
                    f"bad --component {text!r}; want shape,cx,cy,scale[,scale2],n")
            shape = parts[0]
            try:
                nums = [float(p) for p in parts[1:]]
            except ValueError:
                raise DataError(f"bad --component {text!r}")
            cx, cy = nums[0], nums[1]
            scale = tuple(nums[2:-1])
            n = int(nums[-1])
            comps.append(datagen.Component(shape, (cx, cy), scale, n))
        spec = datagen.StreamSpec(comps, noise_fraction=args.noise,
                                  order=args.order, seed=args.seed)
    else:
        spec = datagen.default_benchmark_spec(
            args.seed, points_per_component=args.points,
            noise_fraction=args.noise, order=args.order)
    xs, ys = datagen.generate(spec)
    write_csv(args.out, xs, ys)
    return 0


def cmd_fit(args):
    points, _ = read_csv(args.input, header=args.header, labeled=args.labeled)
    if points.size == 0:
        raise DataError("empty input CSV")
    if args.minmax:
        points = _minmax(points)
    if args.resume:
        learner = load_model(args.resume)
        if learner.dimension != points.shape[1]:
            raise DataError(
                f"dimension mismatch: model has {learner.dimension}, "
                f"input has {points.shape[1]}")
    else:
        learner = StreamClusterer()
    learner.fit(points)
    save_model(learner, args.model)
    print(json.dumps({
        "n_nodes": len(learner.net),
        "n_clusters": learner.n_clusters(),
        "lambda": learner.lam,
        "v_threshold": learner.v_threshold,
        "presented_count": learner.presented_count,
    }))
    return 0


def cmd_label(args):
    learner = load_model(args.model)
    points, _ = read_csv(args.input, header=args.header, labeled=args.labeled)
    if points.size == 0:
        write_csv(args.out, np.empty((0, 0)))
        return 0
    if points.shape[1] != learner.dimension:
        raise DataError(
            f"dimension mismatch: model has {learner.dimension}, "
            f"input has {points.shape[1]}")
    labels = learner.label_points(points)
    write_csv(args.out, points, labels)
    return 0


def cmd_eval(args):
    learner = load_model(args.model)
    points, truth = read_csv(args.input, header=args.header, labeled=True)
    if points.size == 0:
        raise DataError("empty input CSV")
    if points.shape[1] != learner.dimension:
        raise DataError(
            f"dimension mismatch: model has {learner.dimension}, "
            f"input has {points.shape[1]}")
    predicted = learner.label_points(points)
    if not args.include_noise:
        keep = truth != datagen.NOISE_LABEL
        points, truth, predicted = points[keep], truth[keep], predicted[keep]
        if truth.size == 0:
            raise DataError("no non-noise points to evaluate")
    print(json.dumps({
        "nmi": nmi(predicted, truth),
        "ari": ari(predicted, truth),
        "n_nodes": len(learner.net),
        "n_clusters": learner.n_clusters(),
    }))
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="topostream",
        description="Parameter-free streaming topological clustering.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_io_flags(p):
        p.add_argument("--header", action="store_true",
                       help="skip one header line in input CSVs")
        p.add_argument("--labeled", action="store_true",
                       help="treat the last CSV column as an integer label")

    p = sub.add_parser("gen", help="generate a synthetic labeled stream")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--points", type=int, default=1500,
                   help="points per component for the default 6-blob spec")
    p.add_argument("--noise", type=float, default=0.1)
    p.add_argument("--order", choices=["stationary", "nonstationary"],
                   default="stationary")
    p.add_argument("--component", action="append",
                   help="custom component as shape,cx,cy,scale[,scale2],n "
                        "(repeatable; overrides the default blobs)")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("fit", help="train (or resume training) on a CSV stream")
    p.add_argument("input")
    p.add_argument("--model", required=True, help="output model path")
    p.add_argument("--resume", help="existing model to continue training")
    p.add_argument("--minmax", action="store_true",
                   help="min-max normalize each column before training")
    add_io_flags(p)
    p.set_defaults(func=cmd_fit)

    p = sub.add_parser("label", help="append cluster labels to a CSV")
    p.add_argument("input")
    p.add_argument("--model", required=True)
    p.add_argument("--out", required=True)
    add_io_flags(p)
    p.set_defaults(func=cmd_label)

    p = sub.add_parser("eval", help="score a model against a labeled CSV")
    p.add_argument("input")
    p.add_argument("--model", required=True)
    p.add_argument("--include-noise", action="store_true",
                   help="keep noise-labeled points in the ground truth")
    p.add_argument("--header", action="store_true")
    p.set_defaults(func=cmd_eval)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (DataError, OSError, ValueError, KeyError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

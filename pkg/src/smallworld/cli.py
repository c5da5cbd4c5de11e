"""``smallworld`` command line entry point.

Exit status: 0 on success, 1 on usage errors, 2 on data errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
from pathlib import Path

from . import __version__
from ._threads import set_threads
from .compare import cross_rank_table, top_k
from .components import (
    ComponentKind,
    connected_components,
    cross_component_failure_probability,
    strongly_connected_components,
    weakly_connected_components,
)
from .errors import DataError, UsageError
from .graph import build_directed, build_undirected, read_edge_list
from .metrics import DegreeMode, degree_histogram, summary_stats
from .milgram import MilgramConfig, MilgramMode, run_milgram, schedule
from .random_model import matched_er_baseline

log = logging.getLogger("smallworld")

USAGE_ERROR = 1
DATA_ERROR = 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(USAGE_ERROR, f"{self.prog}: error: {message}\n")


def _seed(text: str) -> int:
    value = int(text, 0)
    if not 0 <= value < 2**64:
        raise argparse.ArgumentTypeError("seed must fit in an unsigned 64-bit integer")
    return value


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return value


def _load(path: str, directed: bool):
    edges, id_map = read_edge_list(path, directed)
    if edges.dropped_self_loops or edges.collapsed_duplicates:
        log.info(
            "%s: dropped %d self-loops, collapsed %d duplicate edges",
            path, edges.dropped_self_loops, edges.collapsed_duplicates,
        )
    if directed:
        return build_directed(edges, id_map)
    return build_undirected(edges, id_map)


def _csv(rows, header) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _json(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def cmd_stats(args) -> str:
    stats = summary_stats(_load(args.input, args.directed)).to_dict()
    if args.format == "csv":
        return _csv(stats.items(), ["statistic", "value"])
    return _json(stats)


def cmd_components(args) -> str:
    graph = _load(args.input, args.directed)
    kind = ComponentKind(args.kind) if args.kind else (ComponentKind.STRONG if args.directed else ComponentKind.CONNECTED)
    if kind is ComponentKind.CONNECTED:
        if args.directed:
            raise UsageError("--kind connected applies to undirected graphs; use weak or strong")
        labeling = connected_components(graph)
    elif not args.directed:
        raise UsageError(f"--kind {kind.value} needs --directed")
    elif kind is ComponentKind.WEAK:
        labeling = weakly_connected_components(graph)
    else:
        labeling = strongly_connected_components(graph)
    if args.format == "csv":
        return _csv(enumerate(labeling.sizes.tolist()), ["component_index", "size"])
    return _json({
        "kind": labeling.kind.value,
        "count": labeling.count,
        "largest": labeling.largest,
        "failure_probability": cross_component_failure_probability(labeling) if labeling.node_count else None,
        "sizes": labeling.sizes.tolist(),
    })


def cmd_degree_dist(args) -> str:
    graph = _load(args.input, args.directed)
    mode = args.mode or (DegreeMode.IN if args.directed else DegreeMode.DEGREE)
    hist = degree_histogram(graph, mode)
    if args.format == "csv":
        return _csv(hist.rows(), ["degree", "count"])
    return _json({"mode": hist.mode.value, "histogram": [list(r) for r in hist.rows()]})


def cmd_er_baseline(args) -> str:
    graph = _load(args.input, args.directed)
    report = matched_er_baseline(graph, args.seed).to_dict()
    if args.format == "csv":
        return _csv(report.items(), ["statistic", "value"])
    return _json(report)


def cmd_milgram(args) -> str:
    mode = MilgramMode.parse(args.mode) if args.mode else None
    directed = args.directed or mode in (MilgramMode.DIRECTED, MilgramMode.AS_UNDIRECTED)
    graph = _load(args.input, directed)
    mode = mode or MilgramMode.default_for(graph)
    counts = schedule(graph.node_count) if args.paper_schedule else (args.pairs,)
    runs = []
    for pairs in counts:
        result = run_milgram(graph, MilgramConfig(pairs, args.seed, mode))
        runs.append(result)
        log.info("pairs=%d mean=%s failures=%d", pairs, result.mean_path_length, result.failures)

    if args.format == "csv":
        rows = [(r.trials, k, c) for r in runs for k, c in sorted(r.length_histogram.items())]
        return f"# seed={args.seed} mode={mode.value}\n" + _csv(rows, ["pairs", "length", "count"])
    head = {"seed": args.seed, "mode": mode.value}
    if len(runs) == 1:
        return _json({**head, **runs[0].to_dict()})
    return _json({**head, "runs": [r.to_dict() for r in runs]})


def cmd_compare(args) -> str:
    table = cross_rank_table(_load(args.input, args.directed), _load(args.cross, args.cross_directed), args.k)
    if args.format == "csv":
        return _csv([r.csv_fields() for r in table.rows], ["id", "primary_value", "cross_value"])
    return _json(table.to_dict())


def cmd_top_k(args) -> str:
    graph = _load(args.input, args.directed)
    ranked = top_k(graph, args.k, args.mode)
    if args.format == "csv":
        return _csv(ranked, ["id", "value"])
    return _json([list(r) for r in ranked])


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", required=True, help="edge-list file")
    common.add_argument("--directed", action="store_true", help="read edges as ordered pairs")
    common.add_argument("--format", choices=["json", "csv"], default="json")
    common.add_argument("--output", help="write here instead of stdout")
    common.add_argument("--threads", type=_positive, help="worker threads (default: $SMALLWORLD_THREADS or all cores)")
    seeded = argparse.ArgumentParser(add_help=False)
    seeded.add_argument("--seed", type=_seed, default=0)

    parser = _Parser(prog="smallworld", description="Small-world analysis of edge-list graphs.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("-v", "--verbose", action="count", default=0)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("stats", parents=[common], help="summary statistics")
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("components", parents=[common], help="component sizes and chain-failure probability")
    p.add_argument("--kind", choices=[k.value for k in ComponentKind])
    p.set_defaults(func=cmd_components)

    p = sub.add_parser("degree-dist", parents=[common], help="degree histogram for plotting")
    p.add_argument("--mode", choices=[m.value for m in DegreeMode])
    p.set_defaults(func=cmd_degree_dist)

    p = sub.add_parser("er-baseline", parents=[common, seeded], help="clustering vs a density-matched G(n,p)")
    p.set_defaults(func=cmd_er_baseline)

    p = sub.add_parser("milgram", parents=[common, seeded], help="sampled source/target geodesics")
    p.add_argument("--mode", choices=["undirected", "directed", "as-undirected"])
    group = p.add_mutually_exclusive_group()
    group.add_argument("--pairs", type=_positive, default=24000)
    group.add_argument("--paper-schedule", action="store_true", help="run 96, 24000 and N pairs in turn")
    p.set_defaults(func=cmd_milgram)

    p = sub.add_parser("compare", parents=[common], help="top-k cross lookup between two graphs")
    p.add_argument("--cross", required=True, help="second edge-list file")
    p.add_argument("--cross-directed", action="store_true")
    p.add_argument("--k", type=_positive, default=10)
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("top-k", parents=[common], help="highest-degree nodes")
    p.add_argument("--k", type=_positive, default=10)
    p.add_argument("--mode", choices=[m.value for m in DegreeMode])
    p.set_defaults(func=cmd_top_k)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(
        level=logging.WARNING - 10 * min(args.verbose, 2),
        format="%(levelname)s %(name)s: %(message)s",
    )
    try:
        set_threads(args.threads)
        text = args.func(args)
    except UsageError as exc:
        print(f"smallworld {args.command}: usage error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except DataError as exc:
        print(f"smallworld {args.command}: data error: {exc}", file=sys.stderr)
        return DATA_ERROR
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())

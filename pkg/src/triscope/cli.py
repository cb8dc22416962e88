"""Command-line entry point: stats, reorder, export-scene, serve.

Exit codes: 0 success, 1 usage error, 2 input/parse error, 3 scene
validation error. Reports go to stdout, errors to stderr.
"""

from __future__ import annotations

import argparse
import socket
import sys
from pathlib import Path

from . import scene as scene_ops
from .graph import (
    Graph,
    ParseError,
    ParsedEdgeList,
    cluster_ids,
    cluster_triangle_density,
    count_triangles,
    count_wedges,
    parse_clusters,
    parse_edge_list,
    triangle_density,
)
from .layout import force_layout
from .reorder import reorder
from .scene import SceneValidationError

EXIT_USAGE = 1
EXIT_INPUT = 2
EXIT_VALIDATION = 3


class UsageError(Exception):
    pass


class InputError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse defaults to exit code 2
        raise UsageError(message)


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc


def _load_graph(args: argparse.Namespace) -> tuple[Graph, ParsedEdgeList]:
    parsed = parse_edge_list(_read(args.edges))
    g = parsed.graph
    if g.node_count == 0:
        raise InputError(f"{args.edges}: empty edge list")
    if getattr(args, "clusters", None):
        g = parse_clusters(_read(args.clusters), g)
    return g, parsed

def _check_tau(tau_min: float) -> float:
    if not (0.0 <= tau_min <= 1.0):
        raise UsageError(f"--tau-min must be in [0, 1], got {tau_min}")
    return tau_min


def cmd_stats(args: argparse.Namespace) -> int:
    g, parsed = _load_graph(args)
    name = Path(args.edges).stem
    t = count_triangles(g)
    w = count_wedges(g)
    print(f"{name}: {g.node_count} nodes, {g.edge_count} edges, {t} triangles, {w} wedges")
    print(f"triangle density: {triangle_density(g):.6f}")
    if parsed.duplicate_edges or parsed.self_loops:
        print(f"dropped: {parsed.duplicate_edges} duplicate edge(s), {parsed.self_loops} self-loop(s)")
    if g.clusters is not None:
        print("cluster triangle densities:")
        for cid in cluster_ids(g):
            print(f"  {cid}: {cluster_triangle_density(g, cid):.6f}")
    return 0


def cmd_reorder(args: argparse.Namespace) -> int:
    tau_min = _check_tau(args.tau_min)
    g, _ = _load_graph(args)
    ordering = reorder(g, tau_min)
    print(f"tau_min: {tau_min}")
    print(f"blocks: {len(ordering.blocks)}")
    for i, block in enumerate(ordering.blocks):
        print(f"  block {i}: {block.size} node(s), density {block.density:.6f}")
    if args.out:
        doc = scene_ops.ordering_document(ordering, dataset=Path(args.edges).stem)
        Path(args.out).write_text(scene_ops.dumps(doc), encoding="utf-8")
        print(f"ordering written to {args.out}")
    return 0


def cmd_export_scene(args: argparse.Namespace) -> int:
    tau_min = _check_tau(args.tau_min)
    if args.iterations < 1:
        raise UsageError(f"--iterations must be >= 1, got {args.iterations}")
    g, _ = _load_graph(args)
    if args.order:
        doc = scene_ops.loads(_read(args.order))
        ordering = scene_ops.ordering_from_document(doc)
        if sorted(ordering.order) != list(range(g.node_count)):
            raise InputError(f"{args.order}: ordering does not cover this graph's nodes")
    else:
        ordering = reorder(g, tau_min)
    layout = force_layout(g, seed=args.seed, iterations=args.iterations)
    scene = scene_ops.build_scene(g, ordering, layout, dataset=Path(args.edges).stem)
    scene_ops.validate_scene(scene)
    Path(args.out).write_text(scene_ops.dumps(scene), encoding="utf-8")
    print(
        f"scene written to {args.out} "
        f"({g.node_count} nodes, {len(scene['cells'])} cells, "
        f"tau_min={scene['meta']['tau_min']}, seed={args.seed}, iterations={args.iterations})"
    )
    return 0


def cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    from .service import create_app

    if not Path(args.scene).exists():
        raise InputError(f"scene document not found: {args.scene}")
    app = create_app(args.scene, assets_dir=args.assets)
    try:
        probe = socket.socket(socket.AF_INET, socket.SOCK_STREAM)
        probe.setsockopt(socket.SOL_SOCKET, socket.SO_REUSEADDR, 1)
        probe.bind((args.host, args.port))
        probe.close()
    except OSError as exc:
        raise InputError(f"cannot bind {args.host}:{args.port}: {exc}") from exc
    print(f"serving scene at http://{args.host}:{args.port}/ (Ctrl-C to stop)")
    uvicorn.run(app, host=args.host, port=args.port, log_level="warning")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="triscope", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: argparse.ArgumentParser, clusters: bool = True) -> None:
        p.add_argument("--edges", required=True, help="edge list file (u v per line)")
        if clusters:
            p.add_argument("--clusters", help="cluster file (node cluster per line)")

    p_stats = sub.add_parser("stats", help="node/edge/triangle/wedge counts and densities")
    add_common(p_stats)
    p_stats.set_defaults(func=cmd_stats)

    p_re = sub.add_parser("reorder", help="compute the density-driven node ordering")
    add_common(p_re, clusters=False)
    p_re.add_argument("--tau-min", type=float, default=0.5, dest="tau_min")
    p_re.add_argument("--out", help="write the ordering document here")
    p_re.set_defaults(func=cmd_reorder)

    p_ex = sub.add_parser("export-scene", help="reorder + layout + scene document")
    add_common(p_ex)
    p_ex.add_argument("--tau-min", type=float, default=0.5, dest="tau_min")
    p_ex.add_argument("--seed", type=int, default=42)
    p_ex.add_argument("--iterations", type=int, default=500)
    p_ex.add_argument("--order", help="reuse an ordering document instead of reordering")
    p_ex.add_argument("--out", required=True, help="scene document output path")
    p_ex.set_defaults(func=cmd_export_scene)

    p_srv = sub.add_parser("serve", help="serve a scene document and the viewer")
    p_srv.add_argument("--scene", required=True, help="scene document to serve")
    p_srv.add_argument("--assets", help="viewer asset directory (frontend/dist)")
    p_srv.add_argument("--host", default="127.0.0.1")
    p_srv.add_argument("--port", type=int, default=8000)
    p_srv.set_defaults(func=cmd_serve)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (InputError, ParseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except SceneValidationError as exc:
        print(f"invalid scene: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())

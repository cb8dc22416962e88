"""Scene document assembly, canonical JSON serialization, and validation.

The scene document is the single JSON handoff between the engine and any
viewer: layout, edges, triangle cells in order-coordinates, the block
decomposition, and a cluster color palette.
"""

from __future__ import annotations

import json
from typing import Any

import jsonschema

from .graph import Graph, OTHER_CLUSTER, enumerate_triangles, triangle_cluster
from .layout import Layout
from .reorder import Ordering
from .trimatrix import build_matrix

SCHEMA_VERSION = "1"

#: Cluster id used for every triangle of a graph without cluster data.
DEFAULT_CLUSTER = "default"

#: Fixed grey for triangles spanning three clusters.
OTHER_COLOR = "#808080"

# Categorical palette (tab10 minus its grey, which is reserved for Other).
_PALETTE = [
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
    "#8c564b", "#e377c2", "#bcbd22", "#17becf",
]

_pair = {"type": "array", "items": {"type": "integer", "minimum": 0}, "minItems": 2, "maxItems": 2}

SCENE_SCHEMA: dict[str, Any] = {
    "type": "object",
    "required": ["schema_version", "meta", "nodes", "edges", "order", "blocks", "cells", "palette"],
    "properties": {
        "schema_version": {"const": SCHEMA_VERSION},
        "meta": {
            "type": "object",
            "required": ["dataset", "tau_min", "seed", "iterations"],
            "properties": {
                "dataset": {"type": "string"},
                "tau_min": {"type": "number", "minimum": 0, "maximum": 1},
                "seed": {"type": "integer"},
                "iterations": {"type": "integer", "minimum": 1},
            },
        },
        "nodes": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["id", "label", "cluster", "position"],
                "properties": {
                    "id": {"type": "integer", "minimum": 0},
                    "label": {"type": "string"},
                    "cluster": {"type": "string"},
                    "position": {
                        "type": "array",
                        "items": {"type": "number", "minimum": 0, "maximum": 1},
                        "minItems": 2,
                        "maxItems": 2,
                    },
                },
            },
        },
        "edges": {"type": "array", "items": _pair},
        "order": {"type": "array", "items": {"type": "integer", "minimum": 0}},
        "blocks": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["nodes", "density"],
                "properties": {
                    "nodes": {"type": "array", "items": {"type": "integer", "minimum": 0}},
                    "density": {"type": "number", "minimum": 0, "maximum": 1},
                },
            },
        },
        "cells": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["u", "v", "w", "cluster"],
                "properties": {
                    "u": {"type": "integer", "minimum": 0},
                    "v": {"type": "integer", "minimum": 0},
                    "w": {"type": "integer", "minimum": 0},
                    "cluster": {"type": "string"},
                },
            },
        },
        "palette": {"type": "object", "additionalProperties": {"type": "string"}},
    },
}


class SceneValidationError(ValueError):
    """Scene document violates the schema or its structural invariants."""


def build_palette(cluster_list: list[str]) -> dict[str, str]:
    palette = {
        cid: _PALETTE[i % len(_PALETTE)] for i, cid in enumerate(sorted(cluster_list))
    }
    palette[OTHER_CLUSTER] = OTHER_COLOR
    return palette


def build_scene(
    g: Graph,
    ordering: Ordering,
    layout: Layout,
    palette: dict[str, str] | None = None,
    dataset: str = "graph",
) -> dict[str, Any]:
    """Assemble the scene document.

    Cells are expressed in order-coordinates (positions along the reordered
    axes); each carries the cluster id of its triangle, or DEFAULT_CLUSTER
    for cluster-less graphs.
    """
    n = g.node_count
    if len(ordering.order) != n or len(layout.positions) != n:
        raise ValueError("graph, ordering, and layout disagree on node count")
    if palette is None:
        ids = sorted(set(g.clusters.values())) if g.clusters else [DEFAULT_CLUSTER]
        palette = build_palette(ids)

    position_of = {node: pos for pos, node in enumerate(ordering.order)}
    cells = []
    for t in enumerate_triangles(g):
        cid = triangle_cluster(g, t) if g.clusters is not None else DEFAULT_CLUSTER
        u, v, w = sorted(position_of[x] for x in t)
        cells.append({"u": u, "v": v, "w": w, "cluster": cid})
    cells.sort(key=lambda c: (c["u"], c["v"], c["w"]))

    nodes = [
        {
            "id": v,
            "label": g.label_of(v),
            "cluster": g.clusters[v] if g.clusters is not None else DEFAULT_CLUSTER,
            "position": [layout.positions[v][0], layout.positions[v][1]],
        }
        for v in range(n)
    ]
    return {
        "schema_version": SCHEMA_VERSION,
        "meta": {
            "dataset": dataset,
            "tau_min": ordering.tau_min,
            "seed": layout.seed,
            "iterations": layout.iterations,
        },
        "nodes": nodes,
        "edges": [[u, v] for u, v in g.sorted_edges()],
        "order": list(ordering.order),
        "blocks": [{"nodes": list(b.nodes), "density": b.density} for b in ordering.blocks],
        "cells": cells,
        "palette": palette,
    }


def dumps(doc: dict[str, Any]) -> str:
    """Canonical serialization; loads(dumps(x)) -> dumps -> identical bytes."""
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def loads(text: str) -> dict[str, Any]:
    return json.loads(text)


def validate_scene(doc: dict[str, Any]) -> None:
    """Schema check plus the invariants a schema can't express; raises
    SceneValidationError naming the first violation."""
    validator = jsonschema.Draft202012Validator(SCENE_SCHEMA)
    errors = sorted(validator.iter_errors(doc), key=lambda e: list(e.absolute_path))
    if errors:
        first = errors[0]
        path = "/".join(str(p) for p in first.absolute_path) or "(root)"
        raise SceneValidationError(f"{path}: {first.message}")
    n = len(doc["nodes"])
    if sorted(doc["order"]) != list(range(n)):
        raise SceneValidationError("order: not a permutation of node ids")
    block_nodes = [v for b in doc["blocks"] for v in b["nodes"]]
    if sorted(block_nodes) != list(range(n)):
        raise SceneValidationError("blocks: do not partition the node set")
    for cell in doc["cells"]:
        if not (cell["u"] < cell["v"] < cell["w"] < n):
            raise SceneValidationError(f"cells: ({cell['u']},{cell['v']},{cell['w']}) not canonical")
        if cell["cluster"] not in doc["palette"]:
            raise SceneValidationError(f"palette: missing color for cluster {cell['cluster']!r}")


def ordering_document(ordering: Ordering, dataset: str = "graph") -> dict[str, Any]:
    """Standalone serialization of a reordering result."""
    return {
        "schema_version": SCHEMA_VERSION,
        "dataset": dataset,
        "tau_min": ordering.tau_min,
        "order": list(ordering.order),
        "blocks": [{"nodes": list(b.nodes), "density": b.density} for b in ordering.blocks],
    }


def ordering_from_document(doc: dict[str, Any]) -> Ordering:
    from .reorder import Block, Ordering as Ord

    blocks = tuple(Block(nodes=tuple(b["nodes"]), density=b["density"]) for b in doc["blocks"])
    return Ord(order=tuple(doc["order"]), blocks=blocks, tau_min=doc["tau_min"])


def scene_to_graph(doc: dict[str, Any]) -> Graph:
    """Rebuild the Graph a scene was exported from (ids, labels, clusters)."""
    labels = {node["id"]: node["label"] for node in doc["nodes"]}
    clusters = {node["id"]: node["cluster"] for node in doc["nodes"]}
    return Graph(
        node_count=len(doc["nodes"]),
        edges=frozenset((min(u, v), max(u, v)) for u, v in doc["edges"]),
        labels=labels,
        clusters=clusters,
    )


def scene_matrix(doc: dict[str, Any]):
    """TriMatrix in the scene's order-coordinates (for slice/selection queries)."""
    g = scene_to_graph(doc)
    from .trimatrix import reindex

    return reindex(build_matrix(g), doc["order"])

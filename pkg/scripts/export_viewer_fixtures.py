#!/usr/bin/env python3
"""Export the karate scene plus engine-computed expected values for the
viewer's fixture tests (frontend/test/fixtures/).

The viewer recomputes everything from the scene document alone; these
fixtures pin its numbers to the engine's.
"""

from __future__ import annotations

import json
from pathlib import Path

from triscope.graph import (
    cluster_ids,
    cluster_triangle_density,
    influence_score,
    parse_clusters,
    parse_edge_list,
)
from triscope.layout import force_layout
from triscope.reorder import reorder
from triscope.scene import build_scene, dumps
from triscope.trimatrix import build_matrix, extract_slice_view

ROOT = Path(__file__).resolve().parent.parent
OUT = ROOT / "frontend" / "test" / "fixtures"


def main() -> None:
    OUT.mkdir(parents=True, exist_ok=True)
    g = parse_edge_list((ROOT / "data" / "karate.edges").read_text()).graph
    g = parse_clusters((ROOT / "data" / "karate.clusters").read_text(), g)
    ordering = reorder(g, 0.5)
    layout = force_layout(g, seed=42, iterations=500)
    doc = build_scene(g, ordering, layout, dataset="karate")
    (OUT / "karate_scene.json").write_text(dumps(doc), encoding="utf-8")

    matrix = build_matrix(g)
    expected = {
        "counts": {"nodes": g.node_count, "links": g.edge_count, "cells": matrix.triangle_count},
        "influence_by_node": {
            str(v): list(influence_score(g, v)) for v in range(g.node_count)
        },
        "slice_size_by_layer": [
            len(extract_slice_view(matrix, ordering.order[layer]).cells)
            for layer in range(g.node_count)
        ],
        "cluster_density": {
            cid: cluster_triangle_density(g, cid) for cid in cluster_ids(g)
        },
        "node33": {
            "id": g.index_of("33"),
            "influence": list(influence_score(g, g.index_of("33"))),
        },
    }
    (OUT / "karate_expected.json").write_text(
        json.dumps(expected, indent=2) + "\n", encoding="utf-8"
    )
    print(f"fixtures written to {OUT}")


if __name__ == "__main__":
    main()

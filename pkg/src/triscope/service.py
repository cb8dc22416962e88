"""Read-only HTTP surface: the viewer page, the scene document, and a small
set of GET query endpoints backed by the analysis engine.

The document is validated once at startup and served from memory, so every
response is byte-identical no matter how many clients are connected.
"""

from __future__ import annotations

from pathlib import Path

from fastapi import FastAPI, HTTPException
from fastapi.responses import HTMLResponse, Response
from fastapi.staticfiles import StaticFiles
from pydantic import BaseModel

from . import graph as graph_ops
from . import scene as scene_ops
from .trimatrix import build_matrix, extract_slice_view, select_node

_FALLBACK_PAGE = """<!doctype html>
<html><head><meta charset="utf-8"><title>triscope scene</title></head>
<body>
<h1>triscope scene server</h1>
<p>No viewer build found. The scene document is served at
<a href="/scene.json">/scene.json</a>.</p>
<pre id="summary">loading…</pre>
<script>
fetch('/scene.json').then(r => r.json()).then(d => {
  document.getElementById('summary').textContent =
    d.meta.dataset + ': ' + d.nodes.length + ' nodes, ' +
    d.edges.length + ' edges, ' + d.cells.length + ' triangle cells, ' +
    d.blocks.length + ' blocks (tau_min=' + d.meta.tau_min + ')';
});
</script>
</body></html>
"""


class StatsResponse(BaseModel):
    dataset: str
    nodes: int
    edges: int
    triangles: int
    wedges: int
    triangle_density: float
    clusters: list[str]


class InfluenceResponse(BaseModel):
    node: int
    degree: int
    supporting_triangles: int


class SliceResponse(BaseModel):
    node: int
    cells: list[tuple[int, int]]


class SelectionResponse(BaseModel):
    node: int
    highlighted_cells: list[tuple[int, int, int]]
    adjacent_edges: list[tuple[int, int]]
    projections: dict[str, list[tuple[int, int]]]


class ClusterDensityResponse(BaseModel):
    cluster: str
    density: float


def create_app(scene_path: str | Path, assets_dir: str | Path | None = None) -> FastAPI:
    """Build the app for one scene document; raises SceneValidationError
    (after naming the first violation) rather than serving a broken scene."""
    scene_bytes = Path(scene_path).read_bytes()
    doc = scene_ops.loads(scene_bytes.decode("utf-8"))
    scene_ops.validate_scene(doc)
    g = scene_ops.scene_to_graph(doc)
    matrix = build_matrix(g)
    dataset = doc["meta"]["dataset"]

    app = FastAPI(title="triscope", docs_url=None, redoc_url=None)

    index_file = Path(assets_dir) / "index.html" if assets_dir else None

    @app.get("/", response_class=HTMLResponse)
    def index() -> str:
        if index_file is not None and index_file.exists():
            return index_file.read_text(encoding="utf-8")
        return _FALLBACK_PAGE

    @app.get("/scene.json")
    def scene_json() -> Response:
        return Response(content=scene_bytes, media_type="application/json")

    @app.get("/api/stats", response_model=StatsResponse)
    def stats() -> StatsResponse:
        return StatsResponse(
            dataset=dataset,
            nodes=g.node_count,
            edges=g.edge_count,
            triangles=graph_ops.count_triangles(g),
            wedges=graph_ops.count_wedges(g),
            triangle_density=graph_ops.triangle_density(g),
            clusters=graph_ops.cluster_ids(g),
        )

    def _check_node(node_id: int) -> None:
        if not (0 <= node_id < g.node_count):
            raise HTTPException(status_code=404, detail=f"node {node_id} out of range")

    @app.get("/api/node/{node_id}/influence", response_model=InfluenceResponse)
    def influence(node_id: int) -> InfluenceResponse:
        _check_node(node_id)
        score = graph_ops.influence_score(g, node_id)
        return InfluenceResponse(
            node=node_id,
            degree=score.degree,
            supporting_triangles=score.supporting_triangles,
        )

    @app.get("/api/node/{node_id}/selection", response_model=SelectionResponse)
    def selection(node_id: int) -> SelectionResponse:
        _check_node(node_id)
        sel = select_node(matrix, g, node_id)
        return SelectionResponse(
            node=node_id,
            highlighted_cells=list(sel.highlighted_cells),
            adjacent_edges=list(sel.adjacent_edges),
            projections={k: sorted(v) for k, v in sel.projections.items()},
        )

    @app.get("/api/slice/{node_id}", response_model=SliceResponse)
    def slice_view(node_id: int) -> SliceResponse:
        _check_node(node_id)
        sl = extract_slice_view(matrix, node_id)
        return SliceResponse(node=node_id, cells=sorted(sl.cells))

    @app.get("/api/clusters/density", response_model=list[ClusterDensityResponse])
    def cluster_density() -> list[ClusterDensityResponse]:
        return [
            ClusterDensityResponse(
                cluster=cid, density=graph_ops.cluster_triangle_density(g, cid)
            )
            for cid in graph_ops.cluster_ids(g)
        ]

    if assets_dir is not None and Path(assets_dir).is_dir():
        app.mount("/assets", StaticFiles(directory=str(assets_dir)), name="assets")

    return app

// Viewer bootstrap: load the scene, wire input events through the pure
// reducer, and redraw the coupled views after every event.

import { drawGraph, drawMatrix, drawSlice, pickCell, pickNode } from "./draw.js";
import { buildRenderModel } from "./render.js";
import { clusterIds, SceneError, validateScene } from "./scene.js";
import { initialState, reduce } from "./state.js";
import type { SceneDocument, ViewEvent, ViewState } from "./types.js";

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing element #${id}`);
  return node as T;
}

function showBanner(message: string): void {
  const banner = el<HTMLDivElement>("banner");
  banner.textContent = message;
  banner.style.display = "block";
}

async function loadScene(): Promise<SceneDocument> {
  const path = new URLSearchParams(location.search).get("scene") ?? "/scene.json";
  const resp = await fetch(path);
  if (!resp.ok) throw new SceneError(`${path}: HTTP ${resp.status}`);
  return validateScene(await resp.json());
}

function start(doc: SceneDocument): void {
  const graphCanvas = el<HTMLCanvasElement>("graph");
  const matrixCanvas = el<HTMLCanvasElement>("matrix");
  const sliceCanvas = el<HTMLCanvasElement>("slice");
  const slicePanel = el<HTMLDivElement>("slice-panel");
  const clusterOut = el<HTMLDivElement>("cluster-readout");
  const nodeOut = el<HTMLDivElement>("node-readout");

  let state: ViewState = initialState();
  const eventLog: ViewEvent[] = [];

  const graphCtx = graphCanvas.getContext("2d")!;
  const matrixCtx = matrixCanvas.getContext("2d")!;
  const sliceCtx = sliceCanvas.getContext("2d")!;
  const n = doc.nodes.length;

  const matrixViewport = () => ({
    width: matrixCanvas.width,
    height: matrixCanvas.height,
    n,
    state,
  });
  const graphViewport = () => ({ width: graphCanvas.width, height: graphCanvas.height });

  function redraw(): void {
    const model = buildRenderModel(doc, state);
    drawGraph(graphCtx, model, graphViewport());
    drawMatrix(matrixCtx, model, matrixViewport());
    if (model.slice) {
      slicePanel.style.display = "block";
      drawSlice(sliceCtx, model.slice, n, sliceCanvas.width);
    } else {
      slicePanel.style.display = "none";
    }
    clusterOut.textContent = model.clusterReadouts
      ? model.clusterReadouts
          .map((r) => `${r.cluster}: triangle density ${r.density.toFixed(4)}`)
          .join("   |   ")
      : "";
    nodeOut.textContent = model.nodeReadouts
      ? model.nodeReadouts
          .map((r) => `node ${r.node}: degree ${r.degree}, triangles ${r.supportingTriangles}`)
          .join("   |   ")
      : "";
  }

  function dispatch(event: ViewEvent): void {
    eventLog.push(event);
    state = reduce(doc, state, event);
    redraw();
  }
  // exposed for debugging and replay experiments
  (window as unknown as Record<string, unknown>).__triscope = {
    doc,
    eventLog,
    currentState: () => state,
  };

  // matrix: drag rotates, wheel zooms, click extracts a slice
  let dragging = false;
  let moved = false;
  let last: [number, number] = [0, 0];
  matrixCanvas.addEventListener("mousedown", (e) => {
    dragging = true;
    moved = false;
    last = [e.offsetX, e.offsetY];
  });
  window.addEventListener("mouseup", () => (dragging = false));
  matrixCanvas.addEventListener("mousemove", (e) => {
    if (!dragging) return;
    const [lx, ly] = last;
    const dx = e.offsetX - lx;
    const dy = e.offsetY - ly;
    if (Math.abs(dx) + Math.abs(dy) > 2) moved = true;
    last = [e.offsetX, e.offsetY];
    dispatch({ type: "rotate", dyaw: dx * 0.01, dpitch: dy * 0.01 });
  });
  matrixCanvas.addEventListener("wheel", (e) => {
    e.preventDefault();
    dispatch({ type: "zoom", factor: e.deltaY < 0 ? 1.1 : 1 / 1.1 });
  });
  matrixCanvas.addEventListener("click", (e) => {
    if (moved) return;
    const model = buildRenderModel(doc, state);
    const hit = pickCell(model, matrixViewport(), e.offsetX, e.offsetY);
    dispatch({ type: "selectCell", cell: hit });
  });

  // node-link panel: click selects a node, empty space clears
  graphCanvas.addEventListener("click", (e) => {
    const model = buildRenderModel(doc, state);
    const hit = pickNode(model, graphViewport(), e.offsetX, e.offsetY);
    dispatch({ type: "selectNode", node: hit });
  });

  el<HTMLButtonElement>("dismiss-slice").addEventListener("click", () =>
    dispatch({ type: "dismissSlice" }),
  );
  el<HTMLButtonElement>("toggle-color").addEventListener("click", () => {
    if (state.selectedNode !== null) {
      dispatch({ type: "toggleNodeColor", node: state.selectedNode });
    }
  });

  // task panels
  const ids = clusterIds(doc);
  for (const selectId of ["cluster-a", "cluster-b"]) {
    const select = el<HTMLSelectElement>(selectId);
    select.innerHTML =
      '<option value="">—</option>' + ids.map((c) => `<option>${c}</option>`).join("");
    select.addEventListener("change", () => {
      const a = el<HTMLSelectElement>("cluster-a").value || null;
      const b = el<HTMLSelectElement>("cluster-b").value || null;
      dispatch({ type: "compareClusters", a, b });
    });
  }
  for (const inputId of ["node-a", "node-b"]) {
    el<HTMLInputElement>(inputId).addEventListener("change", () => {
      const parse = (id: string) => {
        const raw = el<HTMLInputElement>(id).value.trim();
        if (raw === "") return null;
        const found = doc.nodes.find((node) => node.label === raw || String(node.id) === raw);
        return found ? found.id : null;
      };
      dispatch({ type: "compareNodes", a: parse("node-a"), b: parse("node-b") });
    });
  }

  const legend = el<HTMLDivElement>("legend");
  legend.innerHTML = Object.entries(doc.palette)
    .map(([cid, color]) => `<span class="swatch" style="background:${color}"></span>${cid}`)
    .join(" &nbsp; ");
  el<HTMLSpanElement>("title").textContent =
    `${doc.meta.dataset}: ${doc.nodes.length} nodes, ${doc.edges.length} edges, ` +
    `${doc.cells.length} triangle cells, ${doc.blocks.length} blocks ` +
    `(tau_min=${doc.meta.tau_min})`;

  redraw();
}

loadScene()
  .then(start)
  .catch((err) => {
    showBanner(err instanceof SceneError ? `invalid scene: ${err.message}` : String(err));
  });

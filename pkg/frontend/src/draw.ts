// Canvas drawing for the two coupled views and the extracted slice.
// All geometry is simple orthographic projection; picking reuses the same
// projection so hits match what is on screen.

import type { NodeDot, RenderModel } from "./render.js";
import { FADED_OPACITY } from "./render.js";
import type { ViewState } from "./types.js";

export interface Projected {
  x: number;
  y: number;
  depth: number;
}

export interface MatrixViewport {
  width: number;
  height: number;
  n: number;
  state: ViewState;
}

export function projectPoint(u: number, v: number, w: number, vp: MatrixViewport): Projected {
  const { n, state } = vp;
  const half = (n - 1) / 2;
  const x0 = u - half;
  const y0 = v - half;
  const z0 = w - half;
  const cy = Math.cos(state.yaw);
  const sy = Math.sin(state.yaw);
  const cp = Math.cos(state.pitch);
  const sp = Math.sin(state.pitch);
  // yaw about the vertical axis, then pitch about the horizontal
  const x1 = cy * x0 + sy * z0;
  const z1 = -sy * x0 + cy * z0;
  const y2 = cp * y0 - sp * z1;
  const z2 = sp * y0 + cp * z1;
  const scale = (Math.min(vp.width, vp.height) / (n * 1.9)) * state.zoom;
  return {
    x: vp.width / 2 + x1 * scale,
    y: vp.height / 2 - y2 * scale,
    depth: z2,
  };
}

function cellSize(vp: MatrixViewport): number {
  return Math.max(2, (Math.min(vp.width, vp.height) / (vp.n * 2.2)) * vp.state.zoom * 0.8);
}

export function projectedCells(model: RenderModel, vp: MatrixViewport): (Projected & { index: number })[] {
  return model.cells.map((c) => ({ ...projectPoint(c.u, c.v, c.w, vp), index: c.index }));
}

export function drawMatrix(ctx: CanvasRenderingContext2D, model: RenderModel, vp: MatrixViewport): void {
  ctx.clearRect(0, 0, vp.width, vp.height);
  const n = vp.n;
  const corners: [number, number, number][] = [
    [0, 0, 0], [n - 1, 0, 0], [0, n - 1, 0], [0, 0, n - 1],
    [n - 1, n - 1, 0], [n - 1, 0, n - 1], [0, n - 1, n - 1], [n - 1, n - 1, n - 1],
  ];
  const frame: [number, number][] = [
    [0, 1], [0, 2], [0, 3], [1, 4], [1, 5], [2, 4], [2, 6], [3, 5], [3, 6],
    [4, 7], [5, 7], [6, 7],
  ];
  const pts = corners.map(([u, v, w]) => projectPoint(u, v, w, vp));
  ctx.strokeStyle = "#d5d5d5";
  ctx.lineWidth = 1;
  for (const [a, b] of frame) {
    ctx.beginPath();
    ctx.moveTo(pts[a].x, pts[a].y);
    ctx.lineTo(pts[b].x, pts[b].y);
    ctx.stroke();
  }
  // axis hints at the origin corner
  ctx.fillStyle = "#888";
  ctx.font = "11px sans-serif";
  ctx.fillText("rows", pts[1].x + 4, pts[1].y);
  ctx.fillText("cols", pts[2].x + 4, pts[2].y);
  ctx.fillText("layers", pts[3].x + 4, pts[3].y);

  const size = cellSize(vp);
  const drawable = model.cells
    .map((c) => ({ cell: c, p: projectPoint(c.u, c.v, c.w, vp) }))
    .sort((a, b) => a.p.depth - b.p.depth);
  for (const { cell, p } of drawable) {
    ctx.globalAlpha = cell.faded ? FADED_OPACITY : 1;
    ctx.fillStyle = cell.color;
    ctx.fillRect(p.x - size / 2, p.y - size / 2, size, size);
    if (cell.highlighted) {
      ctx.strokeStyle = "#111";
      ctx.lineWidth = 1.5;
      ctx.strokeRect(p.x - size / 2, p.y - size / 2, size, size);
    }
  }
  ctx.globalAlpha = 1;

  if (model.projections) {
    ctx.globalAlpha = 0.55;
    const planes: [keyof typeof model.projections, (a: number, b: number) => [number, number, number]][] = [
      ["xy", (a, b) => [a, b, 0]],
      ["yz", (a, b) => [0, a, b]],
      ["xz", (a, b) => [a, 0, b]],
    ];
    for (const [plane, place] of planes) {
      for (const [a, b] of model.projections[plane]) {
        const [u, v, w] = place(a, b);
        const p = projectPoint(u, v, w, vp);
        ctx.fillStyle = "#444";
        ctx.fillRect(p.x - size / 3, p.y - size / 3, (2 * size) / 3, (2 * size) / 3);
      }
    }
    ctx.globalAlpha = 1;
  }
}

export interface GraphViewport {
  width: number;
  height: number;
}

const GRAPH_MARGIN = 24;

export function nodeScreenPosition(node: NodeDot, vp: GraphViewport): { x: number; y: number } {
  return {
    x: GRAPH_MARGIN + node.x * (vp.width - 2 * GRAPH_MARGIN),
    y: GRAPH_MARGIN + (1 - node.y) * (vp.height - 2 * GRAPH_MARGIN),
  };
}

export function drawGraph(ctx: CanvasRenderingContext2D, model: RenderModel, vp: GraphViewport): void {
  ctx.clearRect(0, 0, vp.width, vp.height);
  const at = new Map(model.nodes.map((n) => [n.id, nodeScreenPosition(n, vp)]));
  for (const link of model.links) {
    const a = at.get(link.a)!;
    const b = at.get(link.b)!;
    ctx.globalAlpha = link.faded ? FADED_OPACITY : 0.6;
    ctx.strokeStyle = link.highlighted ? "#111" : "#999";
    ctx.lineWidth = link.highlighted ? 1.8 : 1;
    ctx.beginPath();
    ctx.moveTo(a.x, a.y);
    ctx.lineTo(b.x, b.y);
    ctx.stroke();
  }
  for (const node of model.nodes) {
    const p = at.get(node.id)!;
    ctx.globalAlpha = node.faded ? FADED_OPACITY : 1;
    ctx.fillStyle = node.color;
    ctx.beginPath();
    ctx.arc(p.x, p.y, node.highlighted ? 7 : 5, 0, 2 * Math.PI);
    ctx.fill();
    if (node.highlighted) {
      ctx.strokeStyle = "#111";
      ctx.lineWidth = 2;
      ctx.stroke();
      ctx.fillStyle = "#111";
      ctx.font = "12px sans-serif";
      ctx.fillText(node.label, p.x + 9, p.y - 9);
    }
  }
  ctx.globalAlpha = 1;
}

export function drawSlice(
  ctx: CanvasRenderingContext2D,
  slice: NonNullable<RenderModel["slice"]>,
  n: number,
  size: number,
): void {
  ctx.clearRect(0, 0, size, size);
  const cell = Math.max(2, (size - 30) / n);
  ctx.strokeStyle = "#ccc";
  ctx.strokeRect(15, 15, n * cell, n * cell);
  ctx.fillStyle = "#d62728";
  for (const [i, j] of slice.cells) {
    ctx.fillRect(15 + i * cell, 15 + j * cell, Math.max(cell - 1, 1), Math.max(cell - 1, 1));
  }
  ctx.fillStyle = "#111";
  ctx.font = "12px sans-serif";
  ctx.fillText(`layer ${slice.layer} (node ${slice.node}): ${slice.cells.length} cells`, 15, 12);
}

/** Nearest node within reach of a pointer position, else null. */
export function pickNode(model: RenderModel, vp: GraphViewport, x: number, y: number): number | null {
  let best: number | null = null;
  let bestDist = 12;
  for (const node of model.nodes) {
    const p = nodeScreenPosition(node, vp);
    const d = Math.hypot(p.x - x, p.y - y);
    if (d < bestDist) {
      bestDist = d;
      best = node.id;
    }
  }
  return best;
}

/** Nearest cell within reach of a pointer position, else null. */
export function pickCell(model: RenderModel, vp: MatrixViewport, x: number, y: number): number | null {
  const reach = Math.max(8, cellSize(vp));
  let best: number | null = null;
  let bestKey = Infinity;
  for (const p of projectedCells(model, vp)) {
    const d = Math.hypot(p.x - x, p.y - y);
    // prefer the closest; among near-ties the frontmost (largest depth)
    const key = d - p.depth * 1e-3;
    if (d <= reach && key < bestKey) {
      bestKey = key;
      best = p.index;
    }
  }
  return best;
}

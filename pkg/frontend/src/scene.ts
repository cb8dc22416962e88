// Scene document validation and the analysis queries the viewer derives
// from the document alone (no server round trips): influence scores,
// slice contents, selection highlights, per-cluster triangle densities.

import type { SceneDocument } from "./types.js";

export class SceneError extends Error {}

/** Structural validation; throws SceneError naming the first violation. */
export function validateScene(doc: unknown): SceneDocument {
  const d = doc as SceneDocument;
  if (!d || typeof d !== "object") throw new SceneError("document is not an object");
  if (d.schema_version !== "1") {
    throw new SceneError(`schema_version: expected "1", got ${JSON.stringify(d.schema_version)}`);
  }
  for (const key of ["meta", "nodes", "edges", "order", "blocks", "cells", "palette"] as const) {
    if (!(key in d)) throw new SceneError(`missing top-level key ${key}`);
  }
  const n = d.nodes.length;
  if (d.order.length !== n || [...d.order].sort((a, b) => a - b).some((v, i) => v !== i)) {
    throw new SceneError("order: not a permutation of node ids");
  }
  d.nodes.forEach((node, i) => {
    if (node.id !== i) throw new SceneError(`nodes[${i}]: ids must be dense and ascending`);
    const [x, y] = node.position;
    if (!(x >= 0 && x <= 1 && y >= 0 && y <= 1)) {
      throw new SceneError(`nodes[${i}]: position outside the unit square`);
    }
  });
  for (const [a, b] of d.edges) {
    if (a < 0 || b < 0 || a >= n || b >= n) throw new SceneError(`edge (${a},${b}) out of range`);
  }
  d.cells.forEach((c, i) => {
    if (!(c.u < c.v && c.v < c.w && c.w < n)) {
      throw new SceneError(`cells[${i}]: (${c.u},${c.v},${c.w}) not canonical`);
    }
    if (!(c.cluster in d.palette)) {
      throw new SceneError(`cells[${i}]: no palette color for cluster ${JSON.stringify(c.cluster)}`);
    }
  });
  return d;
}

/** position_of[node id] = axis position of that node. */
export function positionOf(doc: SceneDocument): number[] {
  const pos = new Array<number>(doc.order.length);
  doc.order.forEach((node, p) => (pos[node] = p));
  return pos;
}

export function neighborsOf(doc: SceneDocument, node: number): number[] {
  const out: number[] = [];
  for (const [a, b] of doc.edges) {
    if (a === node) out.push(b);
    else if (b === node) out.push(a);
  }
  return out.sort((x, y) => x - y);
}

export function degreeOf(doc: SceneDocument, node: number): number {
  return neighborsOf(doc, node).length;
}

/** Indices of cells whose triangle contains the node (id, not position). */
export function cellsOfNode(doc: SceneDocument, node: number): number[] {
  const p = positionOf(doc)[node];
  const out: number[] = [];
  doc.cells.forEach((c, i) => {
    if (c.u === p || c.v === p || c.w === p) out.push(i);
  });
  return out;
}

export function supportingTriangles(doc: SceneDocument, node: number): number {
  return cellsOfNode(doc, node).length;
}

export interface Influence {
  node: number;
  degree: number;
  supportingTriangles: number;
}

export function influenceOf(doc: SceneDocument, node: number): Influence {
  return {
    node,
    degree: degreeOf(doc, node),
    supportingTriangles: supportingTriangles(doc, node),
  };
}

/**
 * Slice of the symmetric matrix at a layer (position coordinate):
 * the two mirrored 2D cells of every triangle touching that layer.
 */
export function sliceCells(doc: SceneDocument, layer: number): [number, number][] {
  const seen = new Set<string>();
  const out: [number, number][] = [];
  for (const c of doc.cells) {
    let a: number, b: number;
    if (c.u === layer) [a, b] = [c.v, c.w];
    else if (c.v === layer) [a, b] = [c.u, c.w];
    else if (c.w === layer) [a, b] = [c.u, c.v];
    else continue;
    for (const cell of [`${a},${b}`, `${b},${a}`]) {
      if (!seen.has(cell)) {
        seen.add(cell);
        const [i, j] = cell.split(",").map(Number);
        out.push([i, j]);
      }
    }
  }
  return out;
}

export interface Selection {
  node: number;
  cellIndices: number[];
  /** Incident edges as node-id pairs. */
  edges: [number, number][];
  /** Deduplicated projections of highlighted cells per coordinate plane. */
  projections: { xy: [number, number][]; yz: [number, number][]; xz: [number, number][] };
  /** Ego network: the node plus its one-hop neighbors. */
  egoNodes: number[];
}

export function selectionOf(doc: SceneDocument, node: number): Selection {
  const cellIndices = cellsOfNode(doc, node);
  const dedup = (pairs: [number, number][]): [number, number][] => {
    const seen = new Set<string>();
    return pairs.filter((p) => {
      const key = `${p[0]},${p[1]}`;
      if (seen.has(key)) return false;
      seen.add(key);
      return true;
    });
  };
  const picked = cellIndices.map((i) => doc.cells[i]);
  const nbrs = neighborsOf(doc, node);
  return {
    node,
    cellIndices,
    edges: nbrs.map((m) => (m < node ? [m, node] : [node, m])),
    projections: {
      xy: dedup(picked.map((c) => [c.u, c.v])),
      yz: dedup(picked.map((c) => [c.v, c.w])),
      xz: dedup(picked.map((c) => [c.u, c.w])),
    },
    egoNodes: [node, ...nbrs],
  };
}

/** Triangle density of one cluster's induced subgraph, from the document. */
export function clusterDensity(doc: SceneDocument, cluster: string): number {
  const members = new Set(doc.nodes.filter((n) => n.cluster === cluster).map((n) => n.id));
  const nodeAt = doc.order;
  let triangles = 0;
  for (const c of doc.cells) {
    if (members.has(nodeAt[c.u]) && members.has(nodeAt[c.v]) && members.has(nodeAt[c.w])) {
      triangles += 1;
    }
  }
  const degree = new Map<number, number>();
  for (const [a, b] of doc.edges) {
    if (members.has(a) && members.has(b)) {
      degree.set(a, (degree.get(a) ?? 0) + 1);
      degree.set(b, (degree.get(b) ?? 0) + 1);
    }
  }
  let wedges = 0;
  for (const d of degree.values()) wedges += (d * (d - 1)) / 2;
  return wedges > 0 ? (3 * triangles) / wedges : 0;
}

export function clusterIds(doc: SceneDocument): string[] {
  return [...new Set(doc.nodes.map((n) => n.cluster))].sort();
}

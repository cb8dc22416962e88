// Render model: everything the canvases draw, derived as plain data from
// (SceneDocument, ViewState). Keeping this pure lets the tests assert
// exactly what would appear on screen without a DOM.

import {
  clusterDensity,
  influenceOf,
  selectionOf,
  sliceCells,
  type Influence,
  type Selection,
} from "./scene.js";
import type { SceneDocument, ViewState } from "./types.js";

export const HIDDEN_COLOR = "#c0c0c0";
export const FADED_OPACITY = 0.15;

export interface NodeDot {
  id: number;
  label: string;
  x: number;
  y: number;
  color: string;
  faded: boolean;
  highlighted: boolean;
}

export interface LinkLine {
  a: number;
  b: number;
  faded: boolean;
  highlighted: boolean;
}

export interface CubeCell {
  index: number;
  u: number;
  v: number;
  w: number;
  color: string;
  highlighted: boolean;
  faded: boolean;
}

export interface SlicePanel {
  layer: number;
  /** Node id whose triangles the slice shows. */
  node: number;
  cells: [number, number][];
}

export interface ClusterReadout {
  cluster: string;
  density: number;
}

export interface RenderModel {
  nodes: NodeDot[];
  links: LinkLine[];
  cells: CubeCell[];
  projections: Selection["projections"] | null;
  slice: SlicePanel | null;
  clusterReadouts: ClusterReadout[] | null;
  nodeReadouts: Influence[] | null;
}

export function buildRenderModel(doc: SceneDocument, state: ViewState): RenderModel {
  const selection = state.selectedNode !== null ? selectionOf(doc, state.selectedNode) : null;
  const ego = selection ? new Set(selection.egoNodes) : null;
  const highlightedCells = selection ? new Set(selection.cellIndices) : null;
  const hidden = new Set(state.hiddenColorNodes);

  const nodes: NodeDot[] = doc.nodes.map((n) => ({
    id: n.id,
    label: n.label,
    x: n.position[0],
    y: n.position[1],
    color: hidden.has(n.id) ? HIDDEN_COLOR : doc.palette[n.cluster] ?? HIDDEN_COLOR,
    faded: ego !== null && !ego.has(n.id),
    highlighted: state.selectedNode === n.id,
  }));

  const links: LinkLine[] = doc.edges.map(([a, b]) => {
    const touches = state.selectedNode !== null && (a === state.selectedNode || b === state.selectedNode);
    return {
      a,
      b,
      highlighted: touches,
      faded: ego !== null && !touches,
    };
  });

  const cells: CubeCell[] = doc.cells.map((c, i) => ({
    index: i,
    u: c.u,
    v: c.v,
    w: c.w,
    color: doc.palette[c.cluster] ?? HIDDEN_COLOR,
    // the selected cell stays marked while its slice is extracted, keeping
    // the visual link back to the source layer
    highlighted: (highlightedCells !== null && highlightedCells.has(i)) || state.selectedCell === i,
    faded: highlightedCells !== null && !highlightedCells.has(i),
  }));

  const slice: SlicePanel | null =
    state.extractedSlice !== null
      ? {
          layer: state.extractedSlice,
          node: doc.order[state.extractedSlice],
          cells: sliceCells(doc, state.extractedSlice),
        }
      : null;

  const [ca, cb] = state.compareClusters;
  const clusterReadouts =
    ca !== null && cb !== null
      ? [
          { cluster: ca, density: clusterDensity(doc, ca) },
          { cluster: cb, density: clusterDensity(doc, cb) },
        ]
      : null;

  const [na, nb] = state.compareNodes;
  const nodeReadouts =
    na !== null && nb !== null ? [influenceOf(doc, na), influenceOf(doc, nb)] : null;

  return {
    nodes,
    links,
    cells,
    projections: selection ? selection.projections : null,
    slice,
    clusterReadouts,
    nodeReadouts,
  };
}

// Scene document shapes (schema_version "1") and viewer state.

export interface SceneMeta {
  dataset: string;
  tau_min: number;
  seed: number;
  iterations: number;
}

export interface SceneNode {
  id: number;
  label: string;
  cluster: string;
  position: [number, number];
}

export interface SceneBlock {
  nodes: number[];
  density: number;
}

/** Triangle cell in order-coordinates (u < v < w are axis positions). */
export interface SceneCell {
  u: number;
  v: number;
  w: number;
  cluster: string;
}

export interface SceneDocument {
  schema_version: string;
  meta: SceneMeta;
  nodes: SceneNode[];
  edges: [number, number][];
  order: number[];
  blocks: SceneBlock[];
  cells: SceneCell[];
  palette: Record<string, string>;
}

export interface ViewState {
  /** Camera orientation for the matrix cube; the node-link panel ignores it. */
  yaw: number;
  pitch: number;
  zoom: number;
  /** Selected node (original node id) or null. */
  selectedNode: number | null;
  /** Selected cell (index into doc.cells) or null. */
  selectedCell: number | null;
  /** Extracted slice layer (position coordinate) or null; at most one. */
  extractedSlice: number | null;
  /** Nodes whose cluster color is temporarily hidden (inference task). */
  hiddenColorNodes: number[];
  /** Panel selections. */
  compareClusters: [string | null, string | null];
  compareNodes: [number | null, number | null];
}

export type ViewEvent =
  | { type: "rotate"; dyaw: number; dpitch: number }
  | { type: "zoom"; factor: number }
  | { type: "selectNode"; node: number | null }
  | { type: "selectCell"; cell: number | null }
  | { type: "dismissSlice" }
  | { type: "toggleNodeColor"; node: number }
  | { type: "compareClusters"; a: string | null; b: string | null }
  | { type: "compareNodes"; a: number | null; b: number | null };

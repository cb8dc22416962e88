// ViewState transitions: a pure reducer, so replaying an event log always
// reproduces the identical final state.

import type { SceneDocument, ViewEvent, ViewState } from "./types.js";

export const MIN_ZOOM = 0.2;
export const MAX_ZOOM = 8;

export function initialState(): ViewState {
  return {
    yaw: Math.PI / 6,
    pitch: Math.PI / 8,
    zoom: 1,
    selectedNode: null,
    selectedCell: null,
    extractedSlice: null,
    hiddenColorNodes: [],
    compareClusters: [null, null],
    compareNodes: [null, null],
  };
}

export function reduce(doc: SceneDocument, state: ViewState, event: ViewEvent): ViewState {
  switch (event.type) {
    case "rotate": {
      const pitch = Math.max(-Math.PI / 2, Math.min(Math.PI / 2, state.pitch + event.dpitch));
      return { ...state, yaw: state.yaw + event.dyaw, pitch };
    }
    case "zoom": {
      const zoom = Math.max(MIN_ZOOM, Math.min(MAX_ZOOM, state.zoom * event.factor));
      return { ...state, zoom };
    }
    case "selectNode": {
      if (event.node !== null && (event.node < 0 || event.node >= doc.nodes.length)) {
        return state;
      }
      // selecting empty space (null) clears the highlight
      return { ...state, selectedNode: event.node, selectedCell: null };
    }
    case "selectCell": {
      if (event.cell === null) {
        return { ...state, selectedCell: null };
      }
      if (event.cell < 0 || event.cell >= doc.cells.length) return state;
      // the slice through the cell's layer coordinate, one at a time
      return {
        ...state,
        selectedCell: event.cell,
        extractedSlice: doc.cells[event.cell].w,
      };
    }
    case "dismissSlice":
      return { ...state, extractedSlice: null, selectedCell: null };
    case "toggleNodeColor": {
      const hidden = state.hiddenColorNodes.includes(event.node)
        ? state.hiddenColorNodes.filter((n) => n !== event.node)
        : [...state.hiddenColorNodes, event.node];
      return { ...state, hiddenColorNodes: hidden };
    }
    case "compareClusters":
      return { ...state, compareClusters: [event.a, event.b] };
    case "compareNodes":
      return { ...state, compareNodes: [event.a, event.b] };
  }
}

export function replay(doc: SceneDocument, events: ViewEvent[], start?: ViewState): ViewState {
  let state = start ?? initialState();
  for (const event of events) state = reduce(doc, state, event);
  return state;
}

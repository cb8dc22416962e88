"""The 3D triangle adjacency matrix and its query operations.

A triangle {u, v, w} occupies exactly one canonical cell (u, v, w) with
u < v < w. The symmetric closure (all six coordinate permutations) is what
makes per-node slices possible; it is materialized on demand, never stored
alongside the canonical form.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Sequence

from .graph import Graph, enumerate_triangles

Cell = tuple[int, int, int]


@dataclass(frozen=True)
class TriMatrix:
    """Canonical sparse triangle matrix: one u<v<w cell per triangle.

    order[pos] gives the original node id sitting at coordinate pos;
    identity unless the matrix was reindexed.
    """

    n: int
    cells: tuple[Cell, ...]
    order: tuple[int, ...]

    def __post_init__(self):
        for u, v, w in self.cells:
            if not (0 <= u < v < w < self.n):
                raise ValueError(f"cell ({u},{v},{w}) is not canonical for n={self.n}")

    @property
    def triangle_count(self) -> int:
        return len(self.cells)


@dataclass(frozen=True)
class SymTriMatrix:
    """All-permutation closure of a TriMatrix (six cells per triangle)."""

    n: int
    cells: frozenset[Cell]


@dataclass(frozen=True)
class Slice:
    """2D layer of the symmetric matrix at third coordinate `node`:
    its cells are the ordered pairs of the other two endpoints of every
    triangle containing that node."""

    node: int
    cells: frozenset[tuple[int, int]]


@dataclass(frozen=True)
class SelectionHighlight:
    """Everything that lights up when a node is selected: its canonical
    cells, its incident edges, and the per-plane projections of those
    cells (deduplicated per plane)."""

    node: int
    highlighted_cells: tuple[Cell, ...]
    adjacent_edges: tuple[tuple[int, int], ...]
    projections: dict[str, frozenset[tuple[int, int]]]


def build_matrix(g: Graph) -> TriMatrix:
    """Canonical triangle matrix of g (identity ordering)."""
    cells = tuple(t.as_tuple() for t in enumerate_triangles(g))
    return TriMatrix(n=g.node_count, cells=cells, order=tuple(range(g.node_count)))


def symmetrize(m: TriMatrix) -> SymTriMatrix:
    """Close the cell set under all six coordinate permutations."""
    sym: set[Cell] = set()
    for cell in m.cells:
        sym.update(permutations(cell))
    return SymTriMatrix(n=m.n, cells=frozenset(sym))


def layer_slice(sm: SymTriMatrix, w: int) -> Slice:
    """Slice of the symmetric matrix at layer w."""
    if not (0 <= w < sm.n):
        raise IndexError(f"layer {w} out of range")
    return Slice(node=w, cells=frozenset((i, j) for i, j, k in sm.cells if k == w))


def extract_slice_view(m: TriMatrix, w: int) -> Slice:
    """The slice shown when a cell on layer w is selected.

    Symmetric triangles are restored for just this layer, directly from the
    canonical cells; content is identical to layer_slice(symmetrize(m), w).
    """
    if not (0 <= w < m.n):
        raise IndexError(f"layer {w} out of range")
    cells: set[tuple[int, int]] = set()
    for cell in m.cells:
        if w in cell:
            a, b = (x for x in cell if x != w)
            cells.add((a, b))
            cells.add((b, a))
    return Slice(node=w, cells=frozenset(cells))


def select_node(m: TriMatrix, g: Graph, v: int) -> SelectionHighlight:
    """Highlight state for selecting node v.

    m and g must share a coordinate space (i.e. m unreindexed, or g already
    relabeled to matrix coordinates).
    """
    if not (0 <= v < m.n):
        raise IndexError(f"node {v} out of range")
    cells = tuple(c for c in m.cells if v in c)
    edges = tuple(sorted((min(v, u), max(v, u)) for u in g.neighbors(v)))
    projections = {
        "xy": frozenset((a, b) for a, b, _ in cells),
        "yz": frozenset((b, c) for _, b, c in cells),
        "xz": frozenset((a, c) for a, _, c in cells),
    }
    return SelectionHighlight(
        node=v, highlighted_cells=cells, adjacent_edges=edges, projections=projections
    )


def reindex(m: TriMatrix, order: Sequence[int]) -> TriMatrix:
    """Re-coordinate every cell through a node ordering.

    order[pos] = original node id. Cells move to their position
    coordinates and are re-canonicalized to u < v < w.
    """
    order = tuple(order)
    if sorted(order) != list(range(m.n)):
        raise ValueError("order is not a permutation of 0..n-1")
    position = {node: pos for pos, node in enumerate(order)}
    cells = tuple(sorted(tuple(sorted((position[u], position[v], position[w])))
                         for u, v, w in m.cells))
    return TriMatrix(n=m.n, cells=cells, order=order)

"""Density-driven node reordering of the triangle matrix.

Slices of the symmetric triangle matrix are compared by cosine similarity;
the graph over positive similarities is split by deleting its weakest
edges until it falls apart, and each side is either accepted as a dense
block (triangle density >= tau_min) or split further. Accepted blocks are
ranked by size and concatenated into the node ordering.

Similarity sort keys are exact rationals (cos^2 = overlap^2 / (|s_i|*|s_j|))
so ascending order and its ties are reproducible bit-for-bit; float cosines
are exposed for reporting only.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from math import sqrt
from typing import Iterable, Sequence

import numpy as np

from .graph import Graph, Triangle, enumerate_triangles, induced_subgraph, triangle_density
from .trimatrix import SymTriMatrix, build_matrix, symmetrize


@dataclass(frozen=True, eq=False)
class SimilarityMatrix:
    """Symmetric n x n slice-similarity values in [0, 1]."""

    n: int
    values: np.ndarray


@dataclass(frozen=True)
class SimilarityEntry:
    """One positive-similarity pair (i < j) with the exact ingredients of
    its cosine: overlap = |s_i & s_j|, sizes a = |s_i|, b = |s_j|.
    Zero/zero slice pairs carry similarity exactly 1."""

    i: int
    j: int
    overlap: int
    a: int
    b: int

    @property
    def key(self) -> Fraction:
        if self.a == 0 and self.b == 0:
            return Fraction(1)
        return Fraction(self.overlap * self.overlap, self.a * self.b)

    @property
    def value(self) -> float:
        if self.a == 0 and self.b == 0:
            return 1.0
        return self.overlap / sqrt(self.a * self.b)


@dataclass(frozen=True)
class SimilarityGraph:
    """Graph whose weighted edges are the strictly positive similarities."""

    n: int
    edges: tuple[SimilarityEntry, ...]


@dataclass(frozen=True)
class Block:
    """One dense-subgraph block: ascending original node ids + density."""

    nodes: tuple[int, ...]
    density: float

    @property
    def size(self) -> int:
        return len(self.nodes)


@dataclass(frozen=True)
class Ordering:
    """Node permutation produced by the reordering, with its blocks.

    order[pos] = original node id; each block's nodes occupy a contiguous
    span of order, blocks ranked by descending size.
    """

    order: tuple[int, ...]
    blocks: tuple[Block, ...]
    tau_min: float


def slice_supports(sm: SymTriMatrix) -> list[set[tuple[int, int]]]:
    """Per-layer cell sets of the symmetric matrix (the slice supports)."""
    supports: list[set[tuple[int, int]]] = [set() for _ in range(sm.n)]
    for i, j, k in sm.cells:
        supports[k].add((i, j))
    return supports


def similarity_matrix(sm: SymTriMatrix) -> SimilarityMatrix:
    """Pairwise slice similarities: cosine for two nonzero slices, 1 for
    two zero slices, 0 when exactly one is zero."""
    supports = slice_supports(sm)
    n = sm.n
    values = np.zeros((n, n))
    for i in range(n):
        values[i, i] = 1.0
        for j in range(i + 1, n):
            a, b = len(supports[i]), len(supports[j])
            if a == 0 and b == 0:
                s = 1.0
            elif a == 0 or b == 0:
                s = 0.0
            else:
                s = len(supports[i] & supports[j]) / sqrt(a * b)
            values[i, j] = values[j, i] = s
    return SimilarityMatrix(n=n, values=values)


def similarity_graph(sm: SymTriMatrix) -> SimilarityGraph:
    """Positive-similarity graph used by the reordering."""
    supports = slice_supports(sm)
    entries: list[SimilarityEntry] = []
    for i in range(sm.n):
        for j in range(i + 1, sm.n):
            a, b = len(supports[i]), len(supports[j])
            if a == 0 and b == 0:
                entries.append(SimilarityEntry(i, j, overlap=0, a=0, b=0))
            elif a > 0 and b > 0:
                o = len(supports[i] & supports[j])
                if o > 0:
                    entries.append(SimilarityEntry(i, j, overlap=o, a=a, b=b))
    return SimilarityGraph(n=sm.n, edges=tuple(entries))


def sorted_tuples(gs: SimilarityGraph) -> list[SimilarityEntry]:
    """Entries ascending by similarity, ties by (i, j)."""
    return sorted(gs.edges, key=lambda e: (e.key, e.i, e.j))


def _components(adj: dict[int, set[int]], nodes: Sequence[int]) -> list[tuple[int, ...]]:
    """Connected components of adj restricted to nodes, sorted by min id."""
    node_set = set(nodes)
    seen: set[int] = set()
    comps: list[tuple[int, ...]] = []
    for start in sorted(node_set):
        if start in seen:
            continue
        queue = deque([start])
        comp = {start}
        seen.add(start)
        while queue:
            cur = queue.popleft()
            for nxt in adj[cur]:
                if nxt in node_set and nxt not in seen:
                    seen.add(nxt)
                    comp.add(nxt)
                    queue.append(nxt)
        comps.append(tuple(sorted(comp)))
    return comps


def _block_density(g: Graph, nodes: Sequence[int]) -> float:
    return triangle_density(induced_subgraph(g, nodes))


def _run_blocks(
    g: Graph,
    gs_adj: dict[int, set[int]],
    nodes: Sequence[int],
    tuples: Sequence[SimilarityEntry],
    tau_min: float,
    out: list[Block],
) -> None:
    """Worklist form of the recursive block extraction.

    Each item either becomes a block or splits: first along graph
    components, then along similarity components; a connected similarity
    graph below the density threshold is eroded by deleting its weakest
    similarity edges until it disconnects. A subproblem with no positive
    similarities at all cannot be split by erosion, so it stands or falls
    on its own density.
    """
    work: deque[tuple[tuple[int, ...], tuple[SimilarityEntry, ...]]] = deque()
    work.append((tuple(sorted(nodes)), tuple(tuples)))
    while work:
        cur_nodes, cur_tuples = work.popleft()
        if len(cur_nodes) == 1:
            out.append(Block(nodes=cur_nodes, density=_block_density(g, cur_nodes)))
            continue

        g_adj = {v: set(g.neighbors(v)) for v in cur_nodes}
        g_comps = _components(g_adj, cur_nodes)
        if len(g_comps) > 1:
            for comp in g_comps:
                work.append((comp, _filter_tuples(cur_tuples, comp)))
            continue

        node_set = set(cur_nodes)
        has_edges = any(gs_adj[v] & node_set for v in cur_nodes)
        gs_comps = _components(gs_adj, cur_nodes)
        if len(gs_comps) > 1 and has_edges:
            for comp in gs_comps:
                work.append((comp, _filter_tuples(cur_tuples, comp)))
            continue

        density = _block_density(g, cur_nodes)
        if density >= tau_min:
            out.append(Block(nodes=cur_nodes, density=density))
            continue
        if not has_edges:
            for comp in gs_comps:
                work.append((comp, ()))
            continue

        # Connected below threshold: delete edges ascending by similarity
        # until the similarity graph disconnects (or tuples run out).
        for entry in cur_tuples:
            if entry.j in gs_adj[entry.i]:
                gs_adj[entry.i].discard(entry.j)
                gs_adj[entry.j].discard(entry.i)
                if len(_components(gs_adj, cur_nodes)) > 1:
                    break
        gs_comps = _components(gs_adj, cur_nodes)
        if len(gs_comps) == 1:
            # Unsplittable residue; unreachable while tuples cover every
            # similarity edge, kept for safety.
            out.append(Block(nodes=cur_nodes, density=density))
            continue
        for comp in gs_comps:
            work.append((comp, _filter_tuples(cur_tuples, comp)))


def _filter_tuples(
    tuples: Sequence[SimilarityEntry], nodes: Iterable[int]
) -> tuple[SimilarityEntry, ...]:
    keep = set(nodes)
    return tuple(e for e in tuples if e.i in keep and e.j in keep)


def matrix_blocks(
    g_sub: Graph,
    gs_sub: SimilarityGraph,
    t_sub: Sequence[SimilarityEntry],
    tau_min: float,
) -> list[Block]:
    """Dense-subgraph extraction over one subproblem; returns appended blocks."""
    gs_adj: dict[int, set[int]] = {v: set() for v in range(g_sub.node_count)}
    for e in gs_sub.edges:
        gs_adj[e.i].add(e.j)
        gs_adj[e.j].add(e.i)
    out: list[Block] = []
    if g_sub.node_count:
        _run_blocks(g_sub, gs_adj, range(g_sub.node_count), t_sub, tau_min, out)
    return out


def _rank_blocks(blocks: list[Block]) -> list[Block]:
    return sorted(blocks, key=lambda b: (-b.size, -b.density, b.nodes[0]))


def _order_within_block(block: Block, triangles: list[Triangle]) -> list[int]:
    """Nodes by descending in-block triangle support, ties ascending id."""
    members = set(block.nodes)
    counts = {v: 0 for v in block.nodes}
    for t in triangles:
        u, v, w = t.as_tuple()
        if u in members and v in members and w in members:
            counts[u] += 1
            counts[v] += 1
            counts[w] += 1
    return sorted(block.nodes, key=lambda v: (-counts[v], v))


def reorder(g: Graph, tau_min: float = 0.5) -> Ordering:
    """Full reordering pipeline for a graph.

    Builds the symmetric triangle matrix, extracts dense blocks at the
    given density threshold, ranks them by descending node count (ties:
    descending density, then ascending minimum node id), and concatenates
    their nodes into the output permutation.
    """
    if not (0.0 <= tau_min <= 1.0):
        raise ValueError(f"tau_min must be in [0, 1], got {tau_min}")
    sm = symmetrize(build_matrix(g))
    gs = similarity_graph(sm)
    tuples = sorted_tuples(gs)
    blocks = _rank_blocks(matrix_blocks(g, gs, tuples, tau_min))
    triangles = enumerate_triangles(g)
    order: list[int] = []
    for block in blocks:
        order.extend(_order_within_block(block, triangles))
    return Ordering(order=tuple(order), blocks=tuple(blocks), tau_min=tau_min)

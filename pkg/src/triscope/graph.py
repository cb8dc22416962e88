"""Undirected simple graphs and the triangle/wedge/density primitives.

Everything here is read-only after construction: a Graph is a frozen
dataclass with precomputed sorted adjacency, so all queries are safe to
call concurrently.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple

#: Distinguished cluster id for triangles whose endpoints span three clusters.
#: Never valid as a node's own cluster.
OTHER_CLUSTER = "Other"


class ParseError(ValueError):
    """Input text could not be parsed; carries the 1-based line number."""

    def __init__(self, message: str, line_no: int):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph over dense node indices 0..node_count-1.

    edges hold (u, v) pairs with u < v. labels map indices back to the
    tokens they were parsed from; clusters, when present, must assign
    every node exactly one cluster id.
    """

    node_count: int
    edges: frozenset[tuple[int, int]]
    labels: dict[int, str] | None = None
    clusters: dict[int, str] | None = None
    _adjacency: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        nbrs: list[list[int]] = [[] for _ in range(self.node_count)]
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"self-loop on node {u}")
            if not (0 <= u < self.node_count and 0 <= v < self.node_count):
                raise ValueError(f"edge ({u},{v}) out of range for {self.node_count} nodes")
            if u > v:
                raise ValueError(f"edge ({u},{v}) not normalized as u < v")
            nbrs[u].append(v)
            nbrs[v].append(u)
        if self.clusters is not None:
            missing = [v for v in range(self.node_count) if v not in self.clusters]
            if missing:
                raise ValueError(f"cluster map missing nodes {missing[:5]}")
        object.__setattr__(self, "_adjacency", tuple(tuple(sorted(a)) for a in nbrs))

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adjacency[v]

    def degree(self, v: int) -> int:
        return len(self._adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return (u, v) in self.edges if u < v else (v, u) in self.edges

    def label_of(self, v: int) -> str:
        return self.labels[v] if self.labels and v in self.labels else str(v)

    def index_of(self, token: str) -> int:
        """Inverse label lookup (for addressing nodes by their input token)."""
        if self.labels:
            for i, lbl in self.labels.items():
                if lbl == token:
                    return i
        if token.isdigit() and int(token) < self.node_count:
            return int(token)
        raise KeyError(token)

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)


@dataclass(frozen=True)
class Triangle:
    """Three pairwise-connected nodes, stored canonically as u < v < w."""

    u: int
    v: int
    w: int

    def __iter__(self):
        return iter((self.u, self.v, self.w))

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.u, self.v, self.w)


class InfluenceScore(NamedTuple):
    degree: int
    supporting_triangles: int


@dataclass(frozen=True)
class ParsedEdgeList:
    """parse_edge_list result: the graph plus what was dropped on the way."""

    graph: Graph
    duplicate_edges: int
    self_loops: int


def parse_edge_list(text: str) -> ParsedEdgeList:
    """Parse "u v" lines into a Graph.

    Tokens map to dense indices in first-appearance order. Lines starting
    with '#' and blank lines are skipped. Duplicate edges and self-loops
    are dropped but counted in the result.
    """
    index: dict[str, int] = {}
    edges: set[tuple[int, int]] = set()
    duplicates = 0
    self_loops = 0
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise ParseError(f"expected 2 tokens, got {len(tokens)}: {raw!r}", line_no)
        a, b = tokens
        ia = index.setdefault(a, len(index))
        ib = index.setdefault(b, len(index))
        if ia == ib:
            self_loops += 1
            continue
        edge = (ia, ib) if ia < ib else (ib, ia)
        if edge in edges:
            duplicates += 1
            continue
        edges.add(edge)
    labels = {i: tok for tok, i in index.items()}
    graph = Graph(node_count=len(index), edges=frozenset(edges), labels=labels)
    return ParsedEdgeList(graph=graph, duplicate_edges=duplicates, self_loops=self_loops)


def parse_clusters(text: str, g: Graph) -> Graph:
    """Attach a total cluster map parsed from "node cluster" lines.

    Every graph node must receive exactly one cluster id; unknown node
    tokens, conflicting reassignments, and the reserved id "Other" are
    rejected.
    """
    token_to_index: dict[str, int] = {}
    if g.labels:
        token_to_index = {lbl: i for i, lbl in g.labels.items()}
    clusters: dict[int, str] = {}
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise ParseError(f"expected 2 tokens, got {len(tokens)}: {raw!r}", line_no)
        node_tok, cluster_id = tokens
        if node_tok in token_to_index:
            node = token_to_index[node_tok]
        elif node_tok.isdigit() and int(node_tok) < g.node_count:
            node = int(node_tok)
        else:
            raise ParseError(f"unknown node token {node_tok!r}", line_no)
        if cluster_id == OTHER_CLUSTER:
            raise ParseError(f"cluster id {OTHER_CLUSTER!r} is reserved", line_no)
        if node in clusters and clusters[node] != cluster_id:
            raise ParseError(
                f"node {node_tok!r} reassigned from {clusters[node]!r} to {cluster_id!r}", line_no
            )
        clusters[node] = cluster_id
    missing = [v for v in range(g.node_count) if v not in clusters]
    if missing:
        names = ", ".join(g.label_of(v) for v in missing[:5])
        raise ValueError(f"cluster file leaves {len(missing)} node(s) unassigned (e.g. {names})")
    return Graph(node_count=g.node_count, edges=g.edges, labels=g.labels, clusters=clusters)


def enumerate_triangles(g: Graph) -> list[Triangle]:
    """All triangles as canonical (u < v < w) triples in lexicographic order.

    Neighbor-intersection per edge; the O(n^3) triple scan lives only in
    the test oracle.
    """
    out: list[Triangle] = []
    for u, v in g.sorted_edges():
        nu, nv = g.neighbors(u), g.neighbors(v)
        if len(nu) > len(nv):
            nu, nv = nv, nu
        small = set(nv)
        for w in nu:
            if w > v and w in small:
                out.append(Triangle(u, v, w))
    out.sort(key=Triangle.as_tuple)
    return out


def count_triangles(g: Graph) -> int:
    return len(enumerate_triangles(g))


def count_wedges(g: Graph) -> int:
    """Number of unordered two-hop paths: sum over nodes of C(deg, 2)."""
    return sum(math.comb(g.degree(v), 2) for v in range(g.node_count))


def triangle_density(g: Graph) -> float:
    """3t/w, the fraction of wedges closed into triangles; 0 when wedge-free."""
    w = count_wedges(g)
    if w == 0:
        return 0.0
    return 3 * count_triangles(g) / w


def induced_subgraph(g: Graph, nodes: Iterable[int]) -> Graph:
    """Subgraph on the given nodes, reindexed densely in ascending order.

    Original identities survive in the labels (falling back to the original
    index when the source graph is unlabeled).
    """
    keep = sorted(set(nodes))
    for v in keep:
        if not (0 <= v < g.node_count):
            raise IndexError(f"node {v} out of range")
    local = {v: i for i, v in enumerate(keep)}
    keep_set = set(keep)
    edges = frozenset(
        (local[u], local[v]) for u, v in g.edges if u in keep_set and v in keep_set
    )
    labels = {local[v]: g.label_of(v) for v in keep}
    clusters = {local[v]: g.clusters[v] for v in keep} if g.clusters is not None else None
    return Graph(node_count=len(keep), edges=edges, labels=labels, clusters=clusters)


def ego_network(g: Graph, v: int) -> Graph:
    """Induced subgraph on v plus its one-hop neighbors."""
    if not (0 <= v < g.node_count):
        raise IndexError(f"node {v} out of range")
    return induced_subgraph(g, (v, *g.neighbors(v)))


def triangles_containing(g: Graph, v: int) -> int:
    """Count of triangles supported by node v (connected neighbor pairs)."""
    if not (0 <= v < g.node_count):
        raise IndexError(f"node {v} out of range")
    nbrs = g.neighbors(v)
    count = 0
    for i in range(len(nbrs)):
        for j in range(i + 1, len(nbrs)):
            if g.has_edge(nbrs[i], nbrs[j]):
                count += 1
    return count


def influence_score(g: Graph, v: int) -> InfluenceScore:
    """Spreader-influence readout: degree paired with supporting triangles."""
    return InfluenceScore(degree=g.degree(v), supporting_triangles=triangles_containing(g, v))


def triangle_cluster(g: Graph, t: Triangle) -> str:
    """Majority cluster of a triangle: the id shared by at least two
    endpoints, or OTHER_CLUSTER when all three differ."""
    if g.clusters is None:
        raise ValueError("graph has no cluster map")
    a, b, c = (g.clusters[x] for x in t)
    if a == b or a == c:
        return a
    if b == c:
        return b
    return OTHER_CLUSTER


def cluster_ids(g: Graph) -> list[str]:
    if g.clusters is None:
        return []
    return sorted(set(g.clusters.values()))


def cluster_triangle_density(g: Graph, c: str) -> float:
    """Triangle density of the subgraph induced by cluster c's nodes."""
    if g.clusters is None:
        raise ValueError("graph has no cluster map")
    members = [v for v, cid in g.clusters.items() if cid == c]
    if not members:
        raise KeyError(f"unknown cluster id {c!r}")
    return triangle_density(induced_subgraph(g, members))

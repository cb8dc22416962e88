"""Seeded spring-embedder layout normalized into the unit square.

Replaces an external layout dependency so scene exports are reproducible:
same (graph, seed, iterations) always yields the same positions.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graph import Graph

_EPS = 1e-9


@dataclass(frozen=True)
class Layout:
    positions: tuple[tuple[float, float], ...]
    seed: int
    iterations: int


def force_layout(g: Graph, seed: int = 42, iterations: int = 500) -> Layout:
    """Fruchterman-Reingold style layout: all-pairs repulsion k^2/d,
    attraction d^2/k along edges, linearly cooled displacement cap,
    min-max normalized into [0, 1]^2 (degenerate axes collapse to 0.5).
    """
    if iterations < 1:
        raise ValueError("iterations must be >= 1")
    n = g.node_count
    if n == 0:
        return Layout(positions=(), seed=seed, iterations=iterations)
    rng = np.random.default_rng(seed)
    pos = rng.random((n, 2))
    if n > 1:
        k = 1.0 / np.sqrt(n)
        edges = np.array(g.sorted_edges(), dtype=np.intp).reshape(-1, 2)
        t0 = 0.1
        for step in range(iterations):
            delta = pos[:, None, :] - pos[None, :, :]
            dist = np.linalg.norm(delta, axis=2)
            np.fill_diagonal(dist, 1.0)
            dist = np.maximum(dist, _EPS)
            # repulsion between every pair
            disp = (delta / dist[:, :, None]) * (k * k / dist)[:, :, None]
            np.fill_diagonal(disp[:, :, 0], 0.0)
            np.fill_diagonal(disp[:, :, 1], 0.0)
            force = disp.sum(axis=1)
            # attraction along edges
            if len(edges):
                d = pos[edges[:, 0]] - pos[edges[:, 1]]
                dn = np.maximum(np.linalg.norm(d, axis=1), _EPS)
                pull = d * (dn / k)[:, None]
                np.subtract.at(force, edges[:, 0], pull)
                np.add.at(force, edges[:, 1], pull)
            strength = np.maximum(np.linalg.norm(force, axis=1), _EPS)
            temp = t0 * (1.0 - step / iterations)
            pos += force / strength[:, None] * np.minimum(strength, temp)[:, None]
    lo, hi = pos.min(axis=0), pos.max(axis=0)
    span = hi - lo
    out = np.where(span > _EPS, (pos - lo) / np.where(span > _EPS, span, 1.0), 0.5)
    return Layout(
        positions=tuple((float(x), float(y)) for x, y in out),
        seed=seed,
        iterations=iterations,
    )

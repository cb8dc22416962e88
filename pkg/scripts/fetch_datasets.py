#!/usr/bin/env python3
"""Regenerate the public datasets committed under data/.

  football.edges / football.clusters
      Girvan-Newman American College Football network (115 teams / 613
      games / 810 triangles; conferences as clusters).
  euall_subset.edges / euall_subset.clusters
      A deterministic 125-node BFS subgraph of the SNAP email-Eu-core
      network (departments as clusters). This is a documented stand-in:
      the commonly cited 125/482/698 EuAll instance has no published
      extraction procedure, so its exact counts cannot be reconstructed
      from the public source.

Each dataset is tried against a list of mirrors; the committed files were
produced from the vlivashkin/community-graphs GML mirrors, so regenerating
from those reproduces them byte-for-byte (the upstream originals yield the
same graphs, possibly with different line order). The karate files are
committed directly and not touched here.
"""

from __future__ import annotations

import gzip
import io
import re
import sys
import urllib.request
import zipfile
from collections import deque
from pathlib import Path

DATA = Path(__file__).resolve().parent.parent / "data"

COMMUNITY_GRAPHS = (
    "https://raw.githubusercontent.com/vlivashkin/community-graphs/master/gml_connected_subgraphs"
)
SUBSET_SIZE = 125


def _fetch(url: str) -> bytes:
    print(f"fetching {url}")
    with urllib.request.urlopen(url, timeout=60) as resp:
        return resp.read()


def _parse_gml(text: str):
    """Minimal GML reader: node id/label plus a gt or value attribute."""
    labels: dict[int, str] = {}
    groups: dict[int, str] = {}
    edges: list[tuple[int, int]] = []
    for m in re.finditer(r"node\s*\[(.*?)\]", text, re.S):
        body = m.group(1)
        nid = int(re.search(r"\bid\s+(\d+)", body).group(1))
        label = re.search(r'label\s+"([^"]*)"', body)
        group = re.search(r'\bgt\s+"?([\w.-]+)"?', body) or re.search(
            r'\bvalue\s+"?([\w.-]+)"?', body
        )
        labels[nid] = label.group(1) if label else str(nid)
        groups[nid] = group.group(1) if group else "0"
    for m in re.finditer(r"edge\s*\[(.*?)\]", text, re.S):
        body = m.group(1)
        s = int(re.search(r"\bsource\s+(\d+)", body).group(1))
        t = int(re.search(r"\btarget\s+(\d+)", body).group(1))
        edges.append((s, t))
    return labels, groups, edges


def _football_from_mirror() -> str:
    return _fetch(f"{COMMUNITY_GRAPHS}/football.gml").decode("utf-8")


def _football_from_umich() -> str:
    for url in (
        "https://websites.umich.edu/~mejn/netdata/football.zip",
        "http://www-personal.umich.edu/~mejn/netdata/football.zip",
    ):
        try:
            payload = _fetch(url)
        except Exception:
            continue
        with zipfile.ZipFile(io.BytesIO(payload)) as zf:
            name = next(n for n in zf.namelist() if n.endswith("football.gml"))
            return zf.read(name).decode("utf-8", errors="replace")
    raise RuntimeError("umich mirrors unreachable")


def fetch_football() -> None:
    gml = None
    errors = []
    for source in (_football_from_mirror, _football_from_umich):
        try:
            gml = source()
            break
        except Exception as exc:
            errors.append(f"{source.__name__}: {exc}")
    if gml is None:
        raise RuntimeError("; ".join(errors))
    labels, groups, edges = _parse_gml(gml)
    lines = ["# American College Football (Girvan & Newman 2002): Division I-A games, Fall 2000"]
    seen: set[tuple[int, int]] = set()
    for s, t in edges:
        if s == t:
            continue
        key = (min(s, t), max(s, t))
        if key in seen:
            continue
        seen.add(key)
        lines.append(f"{labels[s]} {labels[t]}")
    (DATA / "football.edges").write_text("\n".join(lines) + "\n", encoding="utf-8")
    cl = ["# team -> conference id"]
    cl += [f"{labels[i]} conf{groups[i]}" for i in sorted(labels)]
    (DATA / "football.clusters").write_text("\n".join(cl) + "\n", encoding="utf-8")
    print(f"football: {len(labels)} teams, {len(seen)} games")


def _euall_from_mirror():
    labels, groups, edges = _parse_gml(_fetch(f"{COMMUNITY_GRAPHS}/eu-core.gml").decode("utf-8"))
    orig = {nid: int(labels[nid]) for nid in labels}
    adj: dict[int, set[int]] = {}
    for s, t in edges:
        if s == t:
            continue
        adj.setdefault(s, set()).add(t)
        adj.setdefault(t, set()).add(s)
    dept = {orig[n]: f"dept{groups[n]}" for n in labels}
    return {orig[a]: {orig[b] for b in nbrs} for a, nbrs in adj.items()}, dept


def _euall_from_snap():
    raw = gzip.decompress(_fetch("https://snap.stanford.edu/data/email-Eu-core.txt.gz"))
    adj: dict[int, set[int]] = {}
    for line in raw.decode("utf-8").splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        a, b = map(int, line.split())
        if a == b:
            continue
        adj.setdefault(a, set()).add(b)
        adj.setdefault(b, set()).add(a)
    raw_labels = gzip.decompress(
        _fetch("https://snap.stanford.edu/data/email-Eu-core-department-labels.txt.gz")
    )
    dept: dict[int, str] = {}
    for line in raw_labels.decode("utf-8").splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        node, d = map(int, line.split())
        dept[node] = f"dept{d}"
    return adj, dept


def fetch_euall_subset() -> None:
    adj = dept = None
    errors = []
    for source in (_euall_from_mirror, _euall_from_snap):
        try:
            adj, dept = source()
            break
        except Exception as exc:
            errors.append(f"{source.__name__}: {exc}")
    if adj is None:
        raise RuntimeError("; ".join(errors))
    start = min(adj)
    keep: list[int] = []
    seen = {start}
    queue = deque([start])
    while queue and len(keep) < SUBSET_SIZE:
        cur = queue.popleft()
        keep.append(cur)
        for nxt in sorted(adj[cur]):
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    keep_set = set(keep)
    edges = sorted(
        (min(a, b), max(a, b)) for a in keep_set for b in adj[a] if b in keep_set and a < b
    )
    lines = [
        "# email-Eu-core (SNAP; yin2017local), undirected simplified giant component,",
        f"# deterministic {len(keep_set)}-node BFS subgraph from the lowest-id node "
        "(stand-in; see README)",
    ]
    lines += [f"{a} {b}" for a, b in edges]
    (DATA / "euall_subset.edges").write_text("\n".join(lines) + "\n", encoding="utf-8")
    cl = ["# member -> department id"]
    cl += [f"{v} {dept.get(v, 'dept-unknown')}" for v in sorted(keep_set)]
    (DATA / "euall_subset.clusters").write_text("\n".join(cl) + "\n", encoding="utf-8")
    print(f"euall subset: {len(keep_set)} nodes, {len(edges)} edges")


def main() -> int:
    DATA.mkdir(exist_ok=True)
    failures = []
    for job in (fetch_football, fetch_euall_subset):
        try:
            job()
        except Exception as exc:
            failures.append(f"{job.__name__}: {exc}")
    if failures:
        print("\n".join(failures), file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())

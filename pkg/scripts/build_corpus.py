#!/usr/bin/env python3
"""Write the graph6 corpora used by the search helpers and the test-suite.

* ``data/graphs_le7.g6``: every graph on 1..7 vertices up to isomorphism.
* ``data/regular_connected_le10.g6``: every connected regular graph on
  1..10 vertices up to isomorphism.

Regular graphs are enumerated by breadth-first search over double edge
switches, which connect all ``r``-regular graphs on ``n`` labelled vertices.
"""

from __future__ import annotations

import argparse
from collections import Counter
from pathlib import Path

import networkx as nx
import numpy as np

from alpha_spectra.graph6 import write_graph6_file
from alpha_spectra.graphs import Graph

DATA = Path(__file__).resolve().parent.parent / "data"

# connected regular graphs per order, a well-known count used as a self-check
EXPECTED_REGULAR = {1: 1, 2: 1, 3: 1, 4: 2, 5: 2, 6: 5, 7: 4, 8: 17, 9: 22, 10: 167}


def to_graph(h: nx.Graph) -> Graph:
    idx = {v: k for k, v in enumerate(sorted(h.nodes))}
    return Graph.from_edges(len(idx), [(idx[u], idx[v]) for u, v in h.edges])


def small_graphs(max_n: int = 7) -> list[Graph]:
    return [to_graph(h) for h in nx.graph_atlas_g() if 1 <= h.number_of_nodes() <= max_n]


def invariant(a: np.ndarray) -> tuple:
    # colour refinement is blind on regular graphs; use spectrum and walk counts
    eig = tuple(np.round(np.linalg.eigvalsh(a), 6) + 0.0)
    a2 = a @ a
    walks = tuple(sorted(zip(np.diag(a2 @ a).tolist(), np.sort(a2, axis=1).sum(axis=1).tolist())))
    return eig, walks


class IsoClasses:
    def __init__(self):
        self.buckets: dict[tuple, list[np.ndarray]] = {}

    def add(self, a: np.ndarray) -> bool:
        bucket = self.buckets.setdefault(invariant(a), [])
        if bucket:
            h = nx.from_numpy_array(a)
            if any(nx.is_isomorphic(h, nx.from_numpy_array(b)) for b in bucket):
                return False
        bucket.append(a)
        return True

    def __iter__(self):
        for bucket in self.buckets.values():
            yield from bucket


def switches(a: np.ndarray):
    edges = list(zip(*np.nonzero(np.triu(a))))
    for i, (p, q) in enumerate(edges):
        for u, v in edges[i + 1 :]:
            if len({p, q, u, v}) < 4:
                continue
            for x, y in (((p, u), (q, v)), ((p, v), (q, u))):
                if a[x] or a[y]:
                    continue
                s = a.copy()
                s[p, q] = s[q, p] = s[u, v] = s[v, u] = 0
                s[x] = s[x[::-1]] = s[y] = s[y[::-1]] = 1
                yield s


def regular_graphs(n: int, r: int) -> list[nx.Graph]:
    """All ``r``-regular graphs on ``n`` vertices up to isomorphism."""
    if n * r % 2 or r >= n:
        return []
    if 2 * r > n - 1:
        return [nx.complement(h) for h in regular_graphs(n, n - 1 - r)]
    seed = nx.random_regular_graph(r, n, seed=0) if r else nx.empty_graph(n)
    seen = IsoClasses()
    start = nx.to_numpy_array(seed, nodelist=range(n), dtype=np.int64)
    seen.add(start)
    frontier = [start]
    while frontier:
        nxt = []
        for a in frontier:
            for s in switches(a):
                if seen.add(s):
                    nxt.append(s)
        frontier = nxt
    return [nx.from_numpy_array(a) for a in seen]


def connected_regular(max_n: int = 10) -> list[Graph]:
    out = []
    for n in range(1, max_n + 1):
        found = []
        for r in range(n):
            found += [h for h in regular_graphs(n, r) if nx.is_connected(h)]
        if n in EXPECTED_REGULAR and len(found) != EXPECTED_REGULAR[n]:
            raise SystemExit(f"n={n}: found {len(found)} connected regular graphs, "
                             f"expected {EXPECTED_REGULAR[n]}")
        found.sort(key=lambda h: (next(iter(dict(h.degree).values())), sorted(h.edges)))
        out += [to_graph(h) for h in found]
    return out


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", type=Path, default=DATA)
    ap.add_argument("--max-small", type=int, default=7)
    ap.add_argument("--max-regular", type=int, default=10)
    args = ap.parse_args(argv)
    args.out.mkdir(parents=True, exist_ok=True)

    small = small_graphs(args.max_small)
    write_graph6_file(args.out / f"graphs_le{args.max_small}.g6", small)
    print(f"graphs_le{args.max_small}.g6: {len(small)} graphs")

    reg = connected_regular(args.max_regular)
    write_graph6_file(args.out / f"regular_connected_le{args.max_regular}.g6", reg)
    by_n = Counter(g.n for g in reg)
    print(f"regular_connected_le{args.max_regular}.g6: {len(reg)} graphs {dict(sorted(by_n.items()))}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())

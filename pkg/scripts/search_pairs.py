#!/usr/bin/env python3
"""Search the graph6 corpora for the seed pairs the cospectral constructions need.

* smallest A-cospectral pair of connected regular graphs (same degree)
* A_α-cospectral pairs with equal coronals among graphs on at most 7 vertices

Results go to ``data/search_results.json``.
"""

from __future__ import annotations

import argparse
import json
import time
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from alpha_spectra.alpha import adjacency_charpoly, as_alpha, coronal
from alpha_spectra.cospectral import find_cospectral_pairs
from alpha_spectra.graph6 import read_graph6_file, to_graph6
from alpha_spectra.graphs import regular_degree
from alpha_spectra.poly import fraction_str

DATA = Path(__file__).resolve().parent.parent / "data"


def regular_cospectral(path: Path) -> list[dict]:
    graphs = list(read_graph6_file(path))
    groups: dict = {}
    for g in graphs:
        key = (g.n, regular_degree(g), adjacency_charpoly(g))
        groups.setdefault(key, []).append(g)
    out = []
    for (n, r, f), members in sorted(groups.items(), key=lambda kv: (kv[0][0], kv[0][1])):
        if len(members) > 1:
            out.append({
                "n": n,
                "r": r,
                "charpoly": f.to_json(),
                "graph6": [to_graph6(g) for g in members],
            })
    return out


def equal_coronal_at(args) -> dict:
    path, alpha = args
    a = as_alpha(alpha)
    graphs = list(read_graph6_file(path))
    pairs = find_cospectral_pairs(graphs, a)
    equal = [(g1, g2) for g1, g2 in pairs if coronal(g1, a) == coronal(g2, a)]
    return {
        "alpha": fraction_str(a),
        "cospectral_pairs": len(pairs),
        "equal_coronal": [[to_graph6(g1), to_graph6(g2)] for g1, g2 in equal],
    }


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--data", type=Path, default=DATA)
    ap.add_argument("--alpha", nargs="+", default=["0", "1/3", "1/2"])
    ap.add_argument("--jobs", type=int, default=1)
    args = ap.parse_args(argv)

    t = time.time()
    reg = regular_cospectral(args.data / "regular_connected_le10.g6")
    print(f"regular A-cospectral classes: {len(reg)}; smallest n = {reg[0]['n'] if reg else None}")

    tasks = [(args.data / "graphs_le7.g6", a) for a in args.alpha]
    if args.jobs > 1:
        with ProcessPoolExecutor(args.jobs) as ex:
            small = list(ex.map(equal_coronal_at, tasks))
    else:
        small = [equal_coronal_at(t_) for t_ in tasks]
    for s in small:
        print(f"α={s['alpha']}: {s['cospectral_pairs']} cospectral pairs, "
              f"{len(s['equal_coronal'])} with equal coronals")
    out = {"regular_adjacency_cospectral": reg, "small_equal_coronal": small}
    (args.data / "search_results.json").write_text(json.dumps(out, indent=1) + "\n")
    print(f"done in {time.time() - t:.1f}s")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())

#!/usr/bin/env python3
"""Freeze reference values with sympy, independently of the package's own algebra.

Graphs and products are rebuilt here from plain edge lists; characteristic
polynomials come from ``sympy.Matrix.charpoly`` and coronals from a symbolic
inverse.  Output: ``tests/data/oracles.json`` (coefficients ascending, as
``num/den`` strings).
"""

from __future__ import annotations

import json
from pathlib import Path

import sympy as sp

OUT = Path(__file__).resolve().parent.parent / "tests" / "data" / "oracles.json"
lam = sp.Symbol("lam")


def K(n):
    return n, [(i, j) for i in range(n) for j in range(i + 1, n)]


def P(n):
    return n, [(i, i + 1) for i in range(n - 1)]


def C(n):
    return n, [(i, (i + 1) % n) for i in range(n)]


def E(n):
    return n, []


def Kpq(p, q):
    return p + q, [(i, p + j) for i in range(p) for j in range(q)]


def union(*gs):
    n, edges = 0, []
    for m, es in gs:
        edges += [(i + n, j + n) for i, j in es]
        n += m
    return n, edges


PETERSEN = (10, [(i, (i + 1) % 5) for i in range(5)]
            + [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
            + [(i, i + 5) for i in range(5)])


def vertex_corona(g, comps):
    n, edges = g
    edges = list(edges)
    off = n
    for i, (m, es) in enumerate(comps):
        edges += [(a + off, b + off) for a, b in es]
        edges += [(i, off + v) for v in range(m)]
        off += m
    return off, edges


def edge_corona(g, comps):
    n, base = g
    edges = list(base)
    off = n
    for (u, w), (m, es) in zip(sorted(tuple(sorted(e)) for e in base), comps):
        edges += [(a + off, b + off) for a, b in es]
        edges += [(x, off + v) for v in range(m) for x in (u, w)]
        off += m
    return off, edges


def a_alpha(g, alpha):
    n, edges = g
    A = sp.zeros(n, n)
    for i, j in edges:
        A[i, j] = A[j, i] = 1
    D = sp.diag(*[sum(A.row(i)) for i in range(n)]) if n else sp.zeros(0, 0)
    return alpha * D + (1 - alpha) * A


def charpoly(g, alpha) -> list[str]:
    M = a_alpha(g, sp.Rational(alpha))
    coeffs = M.charpoly(lam).all_coeffs()[::-1]
    return [f"{sp.Rational(c).p}/{sp.Rational(c).q}" for c in coeffs]


def poly_json(expr) -> list[str]:
    coeffs = sp.Poly(expr, lam).all_coeffs()[::-1]
    return [f"{sp.Rational(c).p}/{sp.Rational(c).q}" for c in coeffs]


def coronal(g, alpha) -> dict:
    a = sp.Rational(alpha)
    n = g[0]
    M = (lam - a) * sp.eye(n) - a_alpha(g, a)
    chi = sp.cancel(sp.together((sp.ones(1, n) * M.inv() * sp.ones(n, 1))[0]))
    num, den = sp.fraction(chi)
    lc = sp.Poly(den, lam).LC()
    return {"num": poly_json(sp.expand(num / lc)), "den": poly_json(sp.expand(den / lc))}


NAMED = {
    "K1": K(1), "K2": K(2), "K3": K(3), "K4": K(4), "P3": P(3), "P4": P(4),
    "C3": C(3), "C4": C(4), "C5": C(5), "C6": C(6), "E2": E(2), "E3": E(3),
    "K1,2": Kpq(1, 2), "K1,3": Kpq(1, 3), "K1,4": Kpq(1, 4), "K2,3": Kpq(2, 3),
    "C4uK1": union(C(4), K(1)), "Petersen": PETERSEN,
}


def main() -> int:
    out: dict = {"charpoly": {}, "coronal": {}, "products": {}}
    for name in ["K1", "K2", "K3", "P3", "C4", "K1,3", "K1,4", "C4uK1", "K2,3", "C5"]:
        for a in ["0", "1/3", "1/2", "1"]:
            out["charpoly"][f"{name}@{a}"] = charpoly(NAMED[name], a)
    out["charpoly"]["Petersen@0"] = charpoly(PETERSEN, "0")
    out["charpoly"]["Petersen@1/2"] = charpoly(PETERSEN, "1/2")

    for name in ["K1", "K2", "P3", "K2,3", "K1,4", "C4uK1", "E2", "K1,2", "C3"]:
        for a in ["0", "1/3", "1/2"]:
            out["coronal"][f"{name}@{a}"] = coronal(NAMED[name], a)

    prods = out["products"]
    N = NAMED
    prods["corona K2 o K1 @0"] = charpoly(vertex_corona(N["K2"], [N["K1"]] * 2), "0")
    prods["corona P3 [K1,K2,K1] @0"] = charpoly(vertex_corona(N["P3"], [N["K1"], N["K2"], N["K1"]]), "0")
    prods["corona C3 o K2 @1/5"] = charpoly(vertex_corona(N["C3"], [N["K2"]] * 3), "1/5")
    prods["corona P3 [E2,K3,C4] @1/2"] = charpoly(vertex_corona(N["P3"], [N["E2"], N["K3"], N["C4"]]), "1/2")
    prods["corona K1,3 [C3,K1,2,K1,2,K1,2] @2/3"] = charpoly(
        vertex_corona(N["K1,3"], [N["C3"], N["K1,2"], N["K1,2"], N["K1,2"]]), "2/3")
    prods["corona C4 [K2,E2,K2,E2] @1/3"] = charpoly(
        vertex_corona(N["C4"], [N["K2"], N["E2"], N["K2"], N["E2"]]), "1/3")
    for a in ["0", "1/3", "1/2", "3/4"]:
        prods[f"edge K2[K1] @{a}"] = charpoly(edge_corona(N["K2"], [N["K1"]]), a)
    prods["edge C4[K2] @1/2"] = charpoly(edge_corona(N["C4"], [N["K2"]] * 4), "1/2")
    prods["edge K4[C3] @1/4"] = charpoly(edge_corona(N["K4"], [N["C3"]] * 6), "1/4")
    prods["edge C5[E3] @0"] = charpoly(edge_corona(N["C5"], [N["E3"]] * 5), "0")
    for h in ["K1", "K2"]:
        for seed in ["K1,4", "C4uK1"]:
            prods[f"cor33 {seed} o {h} @0"] = charpoly(vertex_corona(N[seed], [N[h]] * 5), "0")

    OUT.parent.mkdir(parents=True, exist_ok=True)
    OUT.write_text(json.dumps(out, indent=1) + "\n")
    print(f"wrote {OUT}: {sum(len(v) for v in out.values())} values")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())

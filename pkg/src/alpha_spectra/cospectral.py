"""Construction and certification of A_α-cospectral pairs from corona products."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from .alpha import adjacency_charpoly, alpha_charpoly, as_alpha, coronal
from .corona import generalized_corona, generalized_edge_corona
from .edge_forms import edge_hypotheses
from .errors import HypothesisError, IdentityViolation
from .graph6 import to_graph6
from .graphs import Graph, regular_degree
from .poly import LAMBDA, Poly, RatFunc, fraction_str

MAX_EXHAUSTIVE = 10


@dataclass(frozen=True)
class Witness:
    """Outcome of an isomorphism check.

    ``kind`` is one of ``different_order``, ``degree_sequence``,
    ``permutation_exhausted`` (non-isomorphic), ``isomorphic`` or
    ``unverified``.
    """

    kind: str
    detail: str = ""
    mapping: tuple[int, ...] | None = None

    @property
    def nonisomorphic(self) -> bool:
        return self.kind in ("different_order", "degree_sequence", "permutation_exhausted")

    def to_json(self) -> dict:
        out = {"kind": self.kind, "detail": self.detail}
        if self.mapping is not None:
            out["mapping"] = list(self.mapping)
        return out


def find_isomorphism(g1: Graph, g2: Graph) -> tuple[int, ...] | None:
    """Backtracking search for ``φ`` with ``g1.relabel(φ) == g2``."""
    if g1.n != g2.n or g1.m != g2.m:
        return None
    n = g1.n
    d1, d2 = g1.degrees, g2.degrees
    # high degree first, then neighbours of already-placed vertices
    order: list[int] = []
    placed = set()
    remaining = sorted(range(n), key=lambda v: -d1[v])
    while remaining:
        best = max(remaining, key=lambda v: (len(g1.neighbors(v) & placed), d1[v]))
        order.append(best)
        placed.add(best)
        remaining.remove(best)
    phi = [-1] * n
    used = [False] * n

    def extend(k: int) -> bool:
        if k == n:
            return True
        v = order[k]
        for w in range(n):
            if used[w] or d2[w] != d1[v]:
                continue
            ok = True
            for u in order[:k]:
                if g1.has_edge(u, v) != g2.has_edge(phi[u], w):
                    ok = False
                    break
            if not ok:
                continue
            phi[v], used[w] = w, True
            if extend(k + 1):
                return True
            phi[v], used[w] = -1, False
        return False

    return tuple(phi) if extend(0) else None


def certify_nonisomorphic(g1: Graph, g2: Graph, max_exhaustive: int = MAX_EXHAUSTIVE) -> Witness:
    if g1.n != g2.n:
        return Witness("different_order", f"{g1.n} != {g2.n}")
    s1, s2 = g1.degree_sequence(), g2.degree_sequence()
    if s1 != s2:
        return Witness("degree_sequence", f"{s1} != {s2}")
    if g1.n > max_exhaustive:
        return Witness("unverified", f"n = {g1.n} exceeds the exhaustive limit {max_exhaustive}")
    phi = find_isomorphism(g1, g2)
    if phi is None:
        return Witness("permutation_exhausted", "no adjacency-preserving bijection exists")
    return Witness("isomorphic", "explicit isomorphism found", phi)


def are_cospectral(g1: Graph, g2: Graph, alpha) -> bool:
    """Equal A_α spectra (isomorphism is not examined)."""
    return g1.n == g2.n and alpha_charpoly(g1, alpha) == alpha_charpoly(g2, alpha)


@dataclass(frozen=True)
class CospectralCertificate:
    construction: str
    g1: Graph
    g2: Graph
    alpha: Fraction
    charpoly: Poly
    witness: Witness
    hypotheses: tuple[str, ...] = field(default=())

    @property
    def established(self) -> bool:
        return self.witness.nonisomorphic

    def to_json(self) -> dict:
        return {
            "construction": self.construction,
            "alpha": fraction_str(self.alpha),
            "g1": {**self.g1.to_json(), "graph6": to_graph6(self.g1)},
            "g2": {**self.g2.to_json(), "graph6": to_graph6(self.g2)},
            "charpoly": self.charpoly.to_json(),
            "nonisomorphism": self.witness.to_json(),
            "hypotheses_checked": list(self.hypotheses),
        }


def _certify(construction: str, p1: Graph, p2: Graph, a: Fraction, checked: list[str]):
    f1, f2 = alpha_charpoly(p1, a), alpha_charpoly(p2, a)
    if f1 != f2:
        raise IdentityViolation(f"{construction}: products are not A_α-cospectral")
    return CospectralCertificate(
        construction, p1, p2, a, f1, certify_nonisomorphic(p1, p2), tuple(checked)
    )


def _uniform_components(components: Sequence[Graph], a: Fraction) -> RatFunc:
    orders = {h.n for h in components}
    if len(orders) > 1:
        raise HypothesisError(f"components differ in order: {sorted(orders)}")
    chis = [coronal(h, a) for h in components]
    for k, c in enumerate(chis[1:], 1):
        if c != chis[0]:
            raise HypothesisError(f"coronal of component {k} differs: {c} vs {chis[0]}")
    return chis[0]


def cor33_pair(g1: Graph, g2: Graph, components: Sequence[Graph], alpha) -> CospectralCertificate:
    """Cospectral bases with common components of equal order and coronal."""
    a = as_alpha(alpha)
    if g1.n != g2.n:
        raise HypothesisError("base graphs differ in order")
    if len(components) != g1.n:
        raise HypothesisError(f"need {g1.n} components, got {len(components)}")
    if not are_cospectral(g1, g2, a):
        raise HypothesisError(f"base graphs are not A_α-cospectral at α = {a}")
    _uniform_components(components, a)
    p1, _ = generalized_corona(g1, components)
    p2, _ = generalized_corona(g2, components)
    return _certify(
        "generalized corona over cospectral bases",
        p1,
        p2,
        a,
        ["bases A_α-cospectral", "components share order", "components share coronal"],
    )


def cor34_pair(g: Graph, components: Sequence[Graph], alpha) -> CospectralCertificate:
    """Same base; the first ``n`` and last ``n`` of ``2n`` mutually cospectral,
    equal-coronal components."""
    a = as_alpha(alpha)
    n = g.n
    if len(components) != 2 * n:
        raise HypothesisError(f"need {2 * n} components, got {len(components)}")
    polys = [alpha_charpoly(h, a) for h in components]
    for k, f in enumerate(polys[1:], 1):
        if f != polys[0]:
            raise HypothesisError(f"component {k} is not A_α-cospectral with component 0")
    _uniform_components(components, a)
    p1, _ = generalized_corona(g, components[:n])
    p2, _ = generalized_corona(g, components[n:])
    return _certify(
        "generalized corona with swapped cospectral components",
        p1,
        p2,
        a,
        ["components mutually A_α-cospectral", "components share coronal"],
    )


def cor42_pair(g1: Graph, g2: Graph, components: Sequence[Graph], alpha) -> CospectralCertificate:
    """A-cospectral regular bases, common regular components of one order."""
    a = as_alpha(alpha)
    r1, r2 = regular_degree(g1), regular_degree(g2)
    if r1 is None or r2 is None or r1 != r2:
        raise HypothesisError("bases must be regular of the same degree")
    if g1.n != g2.n or adjacency_charpoly(g1) != adjacency_charpoly(g2):
        raise HypothesisError("bases are not A-cospectral")
    edge_hypotheses(g1, components)
    edge_hypotheses(g2, components)
    p1, _ = generalized_edge_corona(g1, components)
    p2, _ = generalized_edge_corona(g2, components)
    return _certify(
        "generalized edge corona over A-cospectral regular bases",
        p1,
        p2,
        a,
        ["bases regular of equal degree", "bases A-cospectral", "components regular of one order and degree"],
    )


def cor43_pair(
    g: Graph, hs: Sequence[Graph], fs: Sequence[Graph], alpha
) -> CospectralCertificate:
    """Regular base; ``H_i`` and ``F_i`` pairwise A_α-cospectral, all regular of one order."""
    a = as_alpha(alpha)
    if len(hs) != g.m or len(fs) != g.m:
        raise HypothesisError(f"need {g.m} components in each family")
    edge_hypotheses(g, hs)
    edge_hypotheses(g, fs)
    if regular_degree(hs[0]) != regular_degree(fs[0]) or hs[0].n != fs[0].n:
        raise HypothesisError("the two families differ in order or degree")
    for k, (h, f) in enumerate(zip(hs, fs)):
        if not are_cospectral(h, f, a):
            raise HypothesisError(f"H_{k} and F_{k} are not A_α-cospectral")
    p1, _ = generalized_edge_corona(g, hs)
    p2, _ = generalized_edge_corona(g, fs)
    return _certify(
        "generalized edge corona with cospectral component swap",
        p1,
        p2,
        a,
        ["base regular", "components regular of one order and degree", "H_i, F_i A_α-cospectral"],
    )


def regular_alpha_from_adjacency(f_adj: Poly, n: int, r: int, alpha) -> Poly:
    """For ``r``-regular G and α < 1: ``f_{A_α}(λ) = (1-α)^n f_A((λ - αr)/(1-α))``."""
    a = as_alpha(alpha)
    if a == 1:
        return Poly.linear(r) ** n
    arg = (LAMBDA - a * r) * (1 / (1 - a))
    return f_adj.eval(arg) * ((1 - a) ** n)


# -- corpus search -----------------------------------------------------------

def group_by_charpoly(graphs: Iterable[Graph], alpha) -> dict[Poly, list[Graph]]:
    a = as_alpha(alpha)
    groups: dict[Poly, list[Graph]] = defaultdict(list)
    for g in graphs:
        groups[alpha_charpoly(g, a)].append(g)
    return groups


def find_cospectral_pairs(graphs: Iterable[Graph], alpha) -> list[tuple[Graph, Graph]]:
    """Non-isomorphic A_α-cospectral pairs, in corpus order.

    Corpus entries are assumed pairwise non-isomorphic; isomorphic pairs are
    dropped when detectable.
    """
    pairs = []
    for group in group_by_charpoly(graphs, alpha).values():
        for g1, g2 in combinations(group, 2):
            if certify_nonisomorphic(g1, g2).kind != "isomorphic":
                pairs.append((g1, g2))
    return pairs


def find_equal_coronal_pairs(graphs: Iterable[Graph], alpha) -> list[tuple[Graph, Graph]]:
    """Cospectral pairs whose coronals also coincide."""
    a = as_alpha(alpha)
    return [
        (g1, g2)
        for g1, g2 in find_cospectral_pairs(graphs, a)
        if coronal(g1, a) == coronal(g2, a)
    ]

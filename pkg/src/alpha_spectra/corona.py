"""Generalized corona and generalized edge corona constructions."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .graphs import Graph


@dataclass(frozen=True)
class CoronaLayout:
    """Where each piece of a corona product sits in the product's vertex range.

    Base vertices occupy ``0..n-1``; component ``k`` occupies
    ``offsets[k] .. offsets[k] + components[k].n - 1``.  ``anchors[k]`` lists
    the base vertices joined to every vertex of component ``k`` (one vertex
    for a generalized corona, the two ends of edge ``k`` for an edge corona).
    """

    kind: str
    base: Graph
    components: tuple[Graph, ...]
    offsets: tuple[int, ...]
    anchors: tuple[tuple[int, ...], ...]

    @property
    def order(self) -> int:
        return self.base.n + sum(h.n for h in self.components)

    def block(self, k: int) -> range:
        return range(self.offsets[k], self.offsets[k] + self.components[k].n)

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "base": self.base.to_json(),
            "components": [h.to_json() for h in self.components],
            "offsets": list(self.offsets),
            "anchors": [list(a) for a in self.anchors],
        }


def _attach(kind: str, base: Graph, comps: Sequence[Graph], anchors: list[tuple[int, ...]]):
    edges = list(base.edges)
    offsets = []
    off = base.n
    for h, anchor in zip(comps, anchors):
        offsets.append(off)
        edges.extend((i + off, j + off) for i, j in h.edges)
        for v in range(h.n):
            edges.extend((a, v + off) for a in anchor)
        off += h.n
    product = Graph(off, tuple(edges))
    layout = CoronaLayout(kind, base, tuple(comps), tuple(offsets), tuple(anchors))
    return product, layout


def generalized_corona(g: Graph, components: Sequence[Graph]) -> tuple[Graph, CoronaLayout]:
    """Join base vertex ``i`` to every vertex of ``components[i]``.

    Components with zero vertices are allowed and contribute nothing.
    """
    if len(components) != g.n:
        raise ValueError(f"need {g.n} components (one per vertex), got {len(components)}")
    return _attach("vertex", g, components, [(i,) for i in range(g.n)])


def corona(g: Graph, h: Graph) -> tuple[Graph, CoronaLayout]:
    return generalized_corona(g, [h] * g.n)


def generalized_edge_corona(g: Graph, components: Sequence[Graph]) -> tuple[Graph, CoronaLayout]:
    """Join both ends of the ``i``-th edge (canonical order) to every vertex of ``components[i]``."""
    if len(components) != g.m:
        raise ValueError(f"need {g.m} components (one per edge), got {len(components)}")
    return _attach("edge", g, components, [tuple(e) for e in g.edges])

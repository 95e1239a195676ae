"""Simple undirected graphs on vertices ``0..n-1``.

Edges are kept in canonical lexicographic order of ``(min, max)`` endpoint,
which fixes "the i-th edge" for edge-corona constructions and the column
order of the incidence matrix.
"""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .linalg import RatMatrix


@dataclass(frozen=True)
class Graph:
    n: int
    edges: tuple[tuple[int, int], ...] = ()
    _adj: tuple[frozenset[int], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be non-negative")
        canon = set()
        for e in self.edges:
            i, j = e
            if i == j:
                raise ValueError(f"loop at vertex {i}")
            if not (0 <= i < self.n and 0 <= j < self.n):
                raise ValueError(f"edge {e} out of range for n={self.n}")
            canon.add((min(i, j), max(i, j)))
        edges = tuple(sorted(canon))
        if len(edges) != len(self.edges):
            raise ValueError("duplicate edge")
        object.__setattr__(self, "edges", edges)
        adj = [set() for _ in range(self.n)]
        for i, j in edges:
            adj[i].add(j)
            adj[j].add(i)
        object.__setattr__(self, "_adj", tuple(frozenset(a) for a in adj))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> Graph:
        """Build a graph, silently merging repeated edges."""
        canon = {(min(i, j), max(i, j)) for i, j in edges}
        return cls(n, tuple(canon))

    @classmethod
    def from_adjacency(cls, rows: Sequence[Sequence[int]]) -> Graph:
        n = len(rows)
        return cls(n, tuple((i, j) for i in range(n) for j in range(i + 1, n) if rows[i][j]))

    @property
    def m(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> frozenset[int]:
        return self._adj[v]

    def has_edge(self, i: int, j: int) -> bool:
        return j in self._adj[i]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(a) for a in self._adj)

    def degree_sequence(self) -> tuple[int, ...]:
        """Degrees sorted in non-increasing order."""
        return tuple(sorted(self.degrees, reverse=True))

    def adjacency(self) -> RatMatrix:
        return RatMatrix(
            [1 if j in self._adj[i] else 0 for j in range(self.n)] for i in range(self.n)
        )

    def degree_matrix(self) -> RatMatrix:
        return RatMatrix.diag(self.degrees)

    def complement(self) -> Graph:
        return Graph(
            self.n,
            tuple(
                (i, j)
                for i in range(self.n)
                for j in range(i + 1, self.n)
                if j not in self._adj[i]
            ),
        )

    def union(self, other: Graph) -> Graph:
        """Disjoint union; ``other``'s vertices are shifted by ``self.n``."""
        k = self.n
        return Graph(self.n + other.n, self.edges + tuple((i + k, j + k) for i, j in other.edges))

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Graph with vertex ``v`` renamed ``perm[v]``."""
        return Graph(self.n, tuple((perm[i], perm[j]) for i, j in self.edges))

    def induced(self, vertices: Sequence[int]) -> Graph:
        index = {v: k for k, v in enumerate(vertices)}
        return Graph(
            len(vertices),
            tuple((index[i], index[j]) for i, j in self.edges if i in index and j in index),
        )

    def components(self) -> list[list[int]]:
        seen = [False] * self.n
        comps = []
        for s in range(self.n):
            if seen[s]:
                continue
            seen[s] = True
            comp, queue = [], deque([s])
            while queue:
                v = queue.popleft()
                comp.append(v)
                for w in self._adj[v]:
                    if not seen[w]:
                        seen[w] = True
                        queue.append(w)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    def to_json(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in self.edges]}

    @classmethod
    def from_json(cls, data: dict) -> Graph:
        return cls.from_edges(int(data["n"]), [tuple(e) for e in data["edges"]])


# -- standard families --------------------------------------------------------

def _positive(name: str, *sizes: int) -> None:
    for s in sizes:
        if not isinstance(s, int) or s < 1:
            raise ValueError(f"{name}: sizes must be positive integers, got {sizes}")


def path(n: int) -> Graph:
    _positive("path", n)
    return Graph(n, tuple((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> Graph:
    if not isinstance(n, int) or n < 3:
        raise ValueError(f"cycle needs at least 3 vertices, got {n}")
    return Graph(n, tuple((i, (i + 1) % n) for i in range(n)))


def complete(n: int) -> Graph:
    _positive("complete", n)
    return Graph(n, tuple((i, j) for i in range(n) for j in range(i + 1, n)))


def complete_bipartite(p: int, q: int) -> Graph:
    """``K_{p,q}`` with part P = ``0..p-1`` listed first."""
    _positive("complete_bipartite", p, q)
    return Graph(p + q, tuple((i, p + j) for i in range(p) for j in range(q)))


def empty(n: int) -> Graph:
    """Edgeless graph on ``n`` vertices (the complement of ``K_n``)."""
    _positive("empty", n)
    return Graph(n)


def star(k: int) -> Graph:
    """``K_{1,k}``: centre 0 and ``k`` leaves."""
    return complete_bipartite(1, k)


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


FAMILIES = {
    "path": path,
    "cycle": cycle,
    "complete": complete,
    "complete_bipartite": complete_bipartite,
    "empty": empty,
    "star": star,
}


def build_named(family: str, *params: int) -> Graph:
    try:
        builder = FAMILIES[family]
    except KeyError:
        raise ValueError(f"unknown family {family!r}; choose from {sorted(FAMILIES)}") from None
    return builder(*params)


_SHORTHAND = [
    (re.compile(r"^K(\d+),(\d+)$"), lambda a, b: complete_bipartite(int(a), int(b))),
    (re.compile(r"^K(\d+)_(\d+)$"), lambda a, b: complete_bipartite(int(a), int(b))),
    (re.compile(r"^K(\d+)$"), lambda a: complete(int(a))),
    (re.compile(r"^P(\d+)$"), lambda a: path(int(a))),
    (re.compile(r"^C(\d+)$"), lambda a: cycle(int(a))),
    (re.compile(r"^S(\d+)$"), lambda a: star(int(a))),
    (re.compile(r"^(?:E|Kbar|co-K)(\d+)$"), lambda a: empty(int(a))),
    (re.compile(r"^Petersen$", re.I), lambda: petersen()),
]


def from_shorthand(text: str) -> Graph:
    """Parse names like ``K3``, ``P4``, ``C5``, ``K2,3``, ``E2`` (edgeless),
    ``S4`` (star) and disjoint unions joined by ``+`` or ``u`` (``C4uK1``)."""
    text = text.strip()
    parts = re.split(r"\+|(?<=\d)u(?=[A-Za-z])", text)
    if len(parts) > 1:
        g = from_shorthand(parts[0])
        for p in parts[1:]:
            g = g.union(from_shorthand(p))
        return g
    for pattern, build in _SHORTHAND:
        mt = pattern.match(text)
        if mt:
            return build(*mt.groups())
    raise ValueError(f"unrecognised graph name {text!r}")


# -- structure ---------------------------------------------------------------

@dataclass(frozen=True)
class BipartitionInfo:
    """Parts ``P``, ``Q`` of a semiregular bipartite graph with degrees ``r1`` on P, ``r2`` on Q."""

    P: tuple[int, ...]
    Q: tuple[int, ...]
    r1: int
    r2: int

    @property
    def p(self) -> int:
        return len(self.P)

    def check(self, g: Graph) -> None:
        if set(self.P) | set(self.Q) != set(range(g.n)) or set(self.P) & set(self.Q):
            raise AssertionError("parts do not partition V")
        side = {v: 0 for v in self.P}
        side.update({v: 1 for v in self.Q})
        for i, j in g.edges:
            if side[i] == side[j]:
                raise AssertionError(f"edge {(i, j)} inside a part")
        if any(g.degree(v) != self.r1 for v in self.P):
            raise AssertionError("P not r1-regular")
        if any(g.degree(v) != self.r2 for v in self.Q):
            raise AssertionError("Q not r2-regular")
        if self.p * self.r1 != len(self.Q) * self.r2:
            raise AssertionError("edge count mismatch across parts")


@dataclass(frozen=True)
class Classification:
    regular: int | None
    bipartition: BipartitionInfo | None

    @property
    def kind(self) -> str:
        if self.regular is not None:
            return "regular"
        if self.bipartition is not None:
            return "semiregular_bipartite"
        return "irregular"


def regular_degree(g: Graph) -> int | None:
    degs = set(g.degrees)
    if len(degs) == 1:
        return degs.pop()
    if g.n == 0:
        return 0
    return None


def two_coloring(g: Graph) -> list[int] | None:
    color = [-1] * g.n
    for s in range(g.n):
        if color[s] >= 0:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for w in g.neighbors(v):
                if color[w] < 0:
                    color[w] = 1 - color[v]
                    queue.append(w)
                elif color[w] == color[v]:
                    return None
    return color


def semiregular_bipartition(g: Graph) -> BipartitionInfo | None:
    """Find parts with uniform degrees on each side, or ``None``.

    P is the smaller part (ties: the part holding the lowest-numbered vertex
    among edges-bearing components).  Components are oriented so that their
    sides agree on the degree pair ``(r1, r2)``.
    """
    if g.n == 0:
        return None
    color = two_coloring(g)
    if color is None:
        return None
    sides: list[tuple[list[int], list[int]]] = []
    isolated: list[int] = []
    for comp in g.components():
        if len(comp) == 1:
            isolated.append(comp[0])
            continue
        a = [v for v in comp if color[v] == color[comp[0]]]
        b = [v for v in comp if color[v] != color[comp[0]]]
        sides.append((a, b))
    if not sides:
        # edgeless: all degrees zero; put everything in P
        return BipartitionInfo(tuple(range(g.n)), (), 0, 0)
    if isolated:
        return None  # an isolated vertex has degree 0 but both r1, r2 ≥ 1 here
    P: list[int] = []
    Q: list[int] = []
    target: tuple[int, int] | None = None
    for a, b in sides:
        da = {g.degree(v) for v in a}
        db = {g.degree(v) for v in b}
        if len(da) != 1 or len(db) != 1:
            return None
        pair = (da.pop(), db.pop())
        if target is None:
            target = pair
        if pair == target:
            P += a
            Q += b
        elif pair == target[::-1]:
            P += b
            Q += a
        else:
            return None
    r1, r2 = target
    if len(P) > len(Q) or (len(P) == len(Q) and min(Q) < min(P)):
        P, Q, r1, r2 = Q, P, r2, r1
    return BipartitionInfo(tuple(sorted(P)), tuple(sorted(Q)), r1, r2)


def classify(g: Graph) -> Classification:
    return Classification(regular_degree(g), semiregular_bipartition(g))


@dataclass(frozen=True)
class IncidenceMatrix:
    rows: tuple[tuple[int, ...], ...]
    edges: tuple[tuple[int, int], ...]

    def matrix(self) -> RatMatrix:
        if not self.rows:
            return RatMatrix([])
        return RatMatrix(self.rows)


def incidence_matrix(g: Graph) -> IncidenceMatrix:
    """``n × m`` vertex-edge incidence matrix; column ``j`` is ``g.edges[j]``."""
    rows = tuple(
        tuple(1 if v in e else 0 for e in g.edges) for v in range(g.n)
    )
    return IncidenceMatrix(rows, g.edges)

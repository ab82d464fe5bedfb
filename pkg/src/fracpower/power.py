"""Subdivisions, graph powers and fractional powers ``(G^(1/n))^m``.

Vertices of a subdivision are named by :class:`Terminal` (an original
vertex) or :class:`Internal` (the vertex at distance ``pos`` from ``a`` on
the path that replaced base edge ``a-b``, always stored with ``a < b``).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Union

from .graph import Graph


@dataclass(frozen=True, order=True)
class Terminal:
    v: int

    def name(self) -> str:
        return f"t{self.v}"


@dataclass(frozen=True, order=True)
class Internal:
    a: int
    pos: int
    b: int

    def __post_init__(self):
        if self.a >= self.b:
            raise ValueError("Internal vertices are stored with a < b; use canonical()")
        if self.pos < 1:
            raise ValueError("internal position must be at least 1")

    def name(self) -> str:
        return f"i{self.a}:{self.pos}:{self.b}"


SubVertex = Union[Terminal, Internal]


def canonical(i: int, l: int, j: int, n: int) -> SubVertex:
    """Canonical name of the vertex at distance ``l`` from ``i`` towards ``j``."""
    if not 0 <= l <= n:
        raise ValueError(f"position {l} outside 0..{n}")
    if i == j:
        raise ValueError("endpoints of a base edge must differ")
    if l == 0:
        return Terminal(i)
    if l == n:
        return Terminal(j)
    if i < j:
        return Internal(i, l, j)
    return Internal(j, n - l, i)


def parse_subvertex(text: str) -> SubVertex:
    if text.startswith("t"):
        return Terminal(int(text[1:]))
    if text.startswith("i"):
        a, pos, b = (int(x) for x in text[1:].split(":"))
        return Internal(a, pos, b)
    raise ValueError(f"not a subvertex name: {text!r}")


@dataclass(frozen=True)
class Hyperedge:
    i: int
    j: int
    n: int

    @property
    def vertices(self) -> list[SubVertex]:
        return [canonical(self.i, l, self.j, self.n) for l in range(self.n + 1)]


@dataclass(frozen=True, eq=False)
class PowerGraph:
    """``G^(m/n)`` materialized on dense indices.

    Terminals take indices ``0..|V|-1``; internal vertices follow ordered
    by ``(i, j, pos)``.
    """

    base: Graph
    m: int
    n: int
    materialized: Graph
    names: tuple[SubVertex, ...]
    index_of: dict = field(repr=False)
    hyperedges: tuple[Hyperedge, ...] = field(repr=False)

    @property
    def vertex_count(self) -> int:
        return self.materialized.vertex_count

    def name_of(self, index: int) -> SubVertex:
        return self.names[index]

    def index(self, i: int, l: int, j: int) -> int:
        """Dense index of the vertex at distance ``l`` from ``i`` on hyperedge ``i-j``."""
        return self.index_of[canonical(i, l, j, self.n)]

    def label_strings(self) -> list[str]:
        return [v.name() for v in self.names]


def _subdivision_layout(g: Graph, n: int):
    names: list[SubVertex] = [Terminal(v) for v in range(g.vertex_count)]
    edges = []
    hyperedges = []
    for i, j in g.sorted_edges():
        hyperedges.append(Hyperedge(i, j, n))
        prev = i
        for pos in range(1, n):
            idx = len(names)
            names.append(Internal(i, pos, j))
            edges.append((prev, idx))
            prev = idx
        edges.append((prev, j))
    return names, edges, hyperedges


def subdivide(g: Graph, n: int) -> PowerGraph:
    """The ``n``-subdivision as a ``PowerGraph`` with ``m = 1``."""
    if n < 1:
        raise ValueError("subdivision parameter must be positive")
    names, edges, hyperedges = _subdivision_layout(g, n)
    sub = Graph(len(names), edges)
    return PowerGraph(
        base=g,
        m=1,
        n=n,
        materialized=sub,
        names=tuple(names),
        index_of={v: k for k, v in enumerate(names)},
        hyperedges=tuple(hyperedges),
    )


def power(g: Graph, m: int) -> Graph:
    """Join every pair of vertices at distance ``1..m``."""
    if m < 1:
        raise ValueError("power must be positive")
    if m == 1:
        return g
    adj = g.adjacency
    edges = []
    for s in range(g.vertex_count):
        seen = {s}
        frontier = [s]
        for _ in range(m):
            nxt = []
            for u in frontier:
                for w in adj[u]:
                    if w not in seen:
                        seen.add(w)
                        nxt.append(w)
            if not nxt:
                break
            frontier = nxt
        edges.extend((s, t) for t in seen if t > s)
    return Graph(g.vertex_count, edges)


def fractional_power(g: Graph, m: int, n: int) -> PowerGraph:
    if m < 1:
        raise ValueError("power must be positive")
    sub = subdivide(g, n)
    return PowerGraph(
        base=g,
        m=m,
        n=n,
        materialized=power(sub.materialized, m),
        names=sub.names,
        index_of=sub.index_of,
        hyperedges=sub.hyperedges,
    )

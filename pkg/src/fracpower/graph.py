"""Simple undirected graphs on integer vertices, traversal, and the small
combinatorial subroutines (coloring orders, distinct representatives) that
the coloring constructions are built from."""

from __future__ import annotations

from collections import deque
from typing import Iterable, Sequence


class Graph:
    """Immutable simple graph on vertices ``0..vertex_count-1``.

    Edges are stored as ordered pairs ``(u, v)`` with ``u < v``; the
    adjacency lists are sorted.
    """

    __slots__ = ("vertex_count", "edges", "adjacency", "_hash")

    def __init__(self, vertex_count: int, edges: Iterable[tuple[int, int]] = ()):
        if vertex_count < 0:
            raise ValueError("vertex_count must be non-negative")
        normalized = set()
        for u, v in edges:
            u, v = int(u), int(v)
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < vertex_count and 0 <= v < vertex_count):
                raise ValueError(f"edge ({u}, {v}) outside 0..{vertex_count - 1}")
            normalized.add((u, v) if u < v else (v, u))
        adj: list[list[int]] = [[] for _ in range(vertex_count)]
        for u, v in normalized:
            adj[u].append(v)
            adj[v].append(u)
        self.vertex_count = vertex_count
        self.edges = frozenset(normalized)
        self.adjacency = tuple(tuple(sorted(nb)) for nb in adj)
        self._hash = None

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self.edges

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.vertex_count == other.vertex_count and self.edges == other.edges

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.vertex_count, self.edges))
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(vertex_count={self.vertex_count}, edges={self.sorted_edges()!r})"


def max_degree(g: Graph) -> int:
    """Maximum vertex degree; 0 for edgeless graphs."""
    return max((len(nb) for nb in g.adjacency), default=0)


def is_connected(g: Graph) -> bool:
    if g.vertex_count <= 1:
        return True
    return len(bounded_distances(g, 0, g.vertex_count)) == g.vertex_count


def is_bipartite(g: Graph) -> bool:
    side = [-1] * g.vertex_count
    for root in range(g.vertex_count):
        if side[root] != -1:
            continue
        side[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in g.adjacency[u]:
                if side[w] == -1:
                    side[w] = 1 - side[u]
                    queue.append(w)
                elif side[w] == side[u]:
                    return False
    return True


def bounded_distances(g: Graph, source: int, radius: int) -> dict[int, int]:
    """BFS distances from ``source`` to every vertex within ``radius``."""
    if not 0 <= source < g.vertex_count:
        raise ValueError(f"source {source} out of range")
    dist = {source: 0}
    frontier = [source]
    adj = g.adjacency
    for d in range(1, radius + 1):
        nxt = []
        for u in frontier:
            for w in adj[u]:
                if w not in dist:
                    dist[w] = d
                    nxt.append(w)
        if not nxt:
            break
        frontier = nxt
    return dist


def coloring_order(g: Graph) -> list[int]:
    """Vertex order in which every vertex but the last has a later neighbor.

    Realized as reverse BFS order from vertex 0, so the root comes last and
    each other vertex is followed (somewhere) by its BFS parent.
    """
    if g.vertex_count == 0:
        raise ValueError("coloring order needs at least one vertex")
    if not is_connected(g):
        raise ValueError("coloring order requires a connected graph")
    order = [0]
    seen = {0}
    i = 0
    while i < len(order):
        for w in g.adjacency[order[i]]:
            if w not in seen:
                seen.add(w)
                order.append(w)
        i += 1
    order.reverse()
    return order


def is_coloring_order(g: Graph, order: Sequence[int]) -> bool:
    """Check the bijection and later-neighbor properties of ``order``."""
    if sorted(order) != list(range(g.vertex_count)):
        return False
    position = {v: k for k, v in enumerate(order)}
    for k, v in enumerate(order[:-1]):
        if not any(position[w] > k for w in g.adjacency[v]):
            return False
    return True


def distinct_representatives(
    availability: Sequence[Iterable[int]], palette: Iterable[int] | None = None
) -> list[int] | None:
    """Pick pairwise-distinct colors, one from each availability set.

    Maximum bipartite matching by augmenting paths; a free color (lowest
    first) is preferred over rerouting an earlier set. Returns ``None``
    when no system of distinct representatives exists.
    """
    sets = [sorted(s) for s in availability]
    if palette is not None:
        allowed = set(palette)
        for s in sets:
            if not allowed.issuperset(s):
                raise ValueError("availability set not contained in palette")
    owner: dict[int, int] = {}

    def augment(i: int, visited: set[int]) -> bool:
        for c in sets[i]:
            if c not in owner:
                owner[c] = i
                return True
        for c in sets[i]:
            if c in visited:
                continue
            visited.add(c)
            if augment(owner[c], visited):
                owner[c] = i
                return True
        return False

    for i in range(len(sets)):
        if not augment(i, set()):
            return None
    result = [0] * len(sets)
    for c, i in owner.items():
        result[i] = c
    return result

"""Named small graphs and exhaustive small-graph corpora."""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations

from .graph import Graph, is_connected, max_degree

ATLAS_MAX_VERTICES = 7


def complete_graph(k: int) -> Graph:
    return Graph(k, combinations(range(k), 2))


def cycle_graph(k: int) -> Graph:
    if k < 3:
        raise ValueError("cycles need at least 3 vertices")
    return Graph(k, [(v, (v + 1) % k) for v in range(k)])


def path_graph(k: int) -> Graph:
    """Path on ``k`` vertices."""
    return Graph(k, [(v, v + 1) for v in range(k - 1)])


def star_graph(leaves: int) -> Graph:
    """``K_{1,leaves}`` with center 0."""
    return Graph(leaves + 1, [(0, v) for v in range(1, leaves + 1)])


def wheel_graph(k: int) -> Graph:
    """Hub 0 joined to a cycle on ``1..k-1`` (``k`` vertices in total)."""
    rim = k - 1
    spokes = [(0, v) for v in range(1, k)]
    ring = [(v, v % rim + 1) for v in range(1, k)]
    return Graph(k, spokes + ring)


def petersen_graph() -> Graph:
    outer = [(v, (v + 1) % 5) for v in range(5)]
    spokes = [(v, v + 5) for v in range(5)]
    inner = [(5 + v, 5 + (v + 2) % 5) for v in range(5)]
    return Graph(10, outer + spokes + inner)


def cube_graph() -> Graph:
    """The 3-cube ``Q_3``."""
    return Graph(8, [(u, u ^ (1 << b)) for u in range(8) for b in range(3) if u < u ^ (1 << b)])


@lru_cache(maxsize=None)
def _atlas() -> tuple[Graph, ...]:
    import networkx as nx

    out = []
    for h in nx.graph_atlas_g():
        mapping = {v: k for k, v in enumerate(sorted(h.nodes()))}
        out.append(Graph(h.number_of_nodes(), [(mapping[u], mapping[v]) for u, v in h.edges()]))
    return tuple(out)


def all_graphs(order: int) -> list[Graph]:
    """One representative per isomorphism class of graphs on ``order`` vertices."""
    if not 0 <= order <= ATLAS_MAX_VERTICES:
        raise ValueError(f"exhaustive corpus available for 0..{ATLAS_MAX_VERTICES} vertices")
    return [g for g in _atlas() if g.vertex_count == order]


def connected_graphs(min_order: int, max_order: int, min_delta: int = 0) -> list[Graph]:
    """All connected graphs (up to isomorphism) in the order range with ``Δ >= min_delta``."""
    out = []
    for order in range(min_order, max_order + 1):
        out.extend(g for g in all_graphs(order) if is_connected(g) and max_degree(g) >= min_delta)
    return out

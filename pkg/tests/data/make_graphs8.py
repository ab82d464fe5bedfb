"""Regenerate graphs8.g6: one graph per isomorphism class on 8 vertices.

Every 8-vertex graph deletes to some 7-vertex graph, so extending each
atlas graph by a vertex with every possible neighborhood covers all
classes; duplicates are removed by hashing plus an isomorphism check.
Run from the repository root: ``python tests/data/make_graphs8.py``.
"""

from collections import defaultdict
from pathlib import Path

import networkx as nx

from fracpower.corpus import all_graphs
from fracpower.io import to_graph6
from fracpower.graph import Graph


def main():
    buckets = defaultdict(list)
    kept = []
    for g in all_graphs(7):
        for mask in range(1 << 7):
            edges = list(g.edges) + [(v, 7) for v in range(7) if mask >> v & 1]
            h = nx.Graph(edges)
            h.add_nodes_from(range(8))
            key = (tuple(sorted(d for _, d in h.degree())), nx.weisfeiler_lehman_graph_hash(h, iterations=3))
            if any(nx.is_isomorphic(h, other) for other in buckets[key]):
                continue
            buckets[key].append(h)
            kept.append(Graph(8, edges))
    assert len(kept) == 12346, len(kept)
    out = Path(__file__).with_name("graphs8.g6")
    out.write_text("".join(to_graph6(g) + "\n" for g in kept))
    print(f"wrote {len(kept)} graphs to {out}")


if __name__ == "__main__":
    main()

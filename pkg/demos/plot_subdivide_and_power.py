"""
Building a fractional power
===========================

Subdivide every edge, then connect vertices that are close in the
subdivision.
"""

from fracpower import Terminal, fractional_power
from fracpower.corpus import complete_graph
from fracpower.io import to_edgelist

# K_2 split into three pieces is a path on four vertices
pg = fractional_power(complete_graph(2), 1, 3)
print(to_edgelist(pg.materialized, pg.label_strings()))

# K_4 with m=2, n=3: 4 terminals and two internal vertices per edge
pg = fractional_power(complete_graph(4), 2, 3)
print(pg.vertex_count, "vertices,", pg.materialized.edge_count, "edges")

# every vertex has a stable name; the terminals come first
print([v.name() for v in pg.names[:6]])
t0 = pg.index_of[Terminal(0)]
print("t0 sees", sorted(pg.names[w].name() for w in pg.materialized.neighbors(t0)))

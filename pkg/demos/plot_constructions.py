"""
Constructive colorings
======================

Each builder returns a coloring keyed by subdivision vertex, and every
result can be checked against the materialized power.
"""

from fracpower import colorbuild as cb
from fracpower.corpus import complete_graph, cube_graph, petersen_graph

g = petersen_graph()
c = cb.color_2_3(g)
print("G^(2/3):", c.palette_size, "colors, proper:", cb.verify(g, c) is None)

# lifting keeps the palette while n grows by m+1
for n in (4, 5, 7, 9):
    c = cb.color_2_n(g, n)
    print(f"G^(2/{n}):", len(c.used_colors()), "colors")

# m/(m+1): terminals keep color 0 on their own
k4 = complete_graph(4)
for m in range(1, 7):
    c = cb.color_m_m1(k4, m)
    print(f"K_4^({m}/{m + 1}):", len(c.used_colors()), "colors")

# one vertex at a time, once the degree leaves room for a free color
k6 = complete_graph(6)
c = cb.color_m_k_m1(k6, 3, 2)
for n in range(8, 12):
    c = cb.extend_by_one(k6, 3, n, c)
print("K_6^(3/12):", c.palette_size, "colors")

# the dispatcher says which construction it used
for m, n in [(2, 7), (3, 4), (3, 5)]:
    c, tag = cb.color_fractional(cube_graph(), m, n)
    print(f"Q_3 m={m} n={n}: {tag}, {len(c.used_colors())} colors")

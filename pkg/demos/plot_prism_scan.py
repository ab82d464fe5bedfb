"""
Scanning small graphs for chi > omega
=====================================

Every connected graph on up to six vertices with maximum degree at least
three, for m <= 3 and n <= 6. One record stands out.
"""

from fracpower.corpus import connected_graphs
from fracpower.io import parse_graph6, to_graph6
from fracpower.oracles import chi_exact, max_clique_exact
from fracpower.power import fractional_power
from fracpower.scan import scan_conjecture, summarize

corpus = [to_graph6(g) for g in connected_graphs(1, 6, 3)]
records, errors = scan_conjecture(corpus, 3, 6, time_limit=60)
print(summarize(records))

for r in records:
    if r.status == "fail":
        print(r.graph, r.m, r.n, "omega", r.omega_formula, "chi", r.exact_chi, r.note)

# EtTg is the triangular prism: two triangles joined by a matching
prism = parse_graph6("EtTg")
print(sorted(prism.edges))
for n in (4, 5, 6, 7, 8):
    pg = fractional_power(prism, 3, n).materialized
    print(f"n={n}: omega {max_clique_exact(pg)}, chi {chi_exact(pg, time_limit=120)}")

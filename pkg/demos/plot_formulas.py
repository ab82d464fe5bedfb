"""
Clique and chromatic numbers in closed form
===========================================

The clique number only depends on the maximum degree and on m.
"""

from fracpower.corpus import cycle_graph, petersen_graph
from fracpower.formulas import chi_cycle_fractional, chi_cycle_power, cycle_block_plan, omega_fractional
from fracpower.oracles import chi_exact, max_clique_exact
from fracpower.power import fractional_power, power

g = petersen_graph()
for m, n in [(2, 3), (3, 4), (3, 7), (4, 9)]:
    exact = max_clique_exact(fractional_power(g, m, n).materialized)
    print(f"Petersen m={m} n={n}: formula {omega_fractional(3, m, n)}, search {exact}")

# cycle powers need more than m+1 colors when m+1 does not divide k
for k, m in [(6, 2), (7, 2), (11, 3)]:
    print(f"C_{k}^{m}: chi {chi_cycle_power(k, m)}, oracle {chi_exact(power(cycle_graph(k), m))}")

# the optimal coloring splits the cycle into blocks of consecutive vertices
print(cycle_block_plan(11, 2).block_sizes)

# a subdivided cycle is again a cycle
print(chi_cycle_fractional(5, 3, 2), chi_exact(fractional_power(cycle_graph(5), 3, 2).materialized))

"""Fractional powers of graphs: construction, clique and chromatic numbers,
and the colorings that realize them."""

from .colorbuild import (
    Coloring,
    ConstructionError,
    EdgeColoring,
    color_2_3,
    color_2_4,
    color_2_5,
    color_2_n,
    color_cycle_power,
    color_fractional,
    color_low_degree,
    color_m_k_m1,
    color_m_m1,
    color_path_power,
    color_subdivision,
    extend_by_one,
    lift_coloring,
    misra_gries_edge_coloring,
    verify,
)
from .formulas import (
    CycleBlockPlan,
    chi_cycle_fractional,
    chi_cycle_power,
    chi_path_fractional,
    chi_path_power,
    cycle_block_plan,
    omega_fractional,
)
from .graph import (
    Graph,
    bounded_distances,
    coloring_order,
    distinct_representatives,
    is_bipartite,
    is_coloring_order,
    is_connected,
    max_degree,
)
from .io import ParseError, parse_graph, parse_graph6, to_dot, to_edgelist, to_graph6
from .oracles import OracleUnknown, chi_exact, derangement, max_clique_exact, validate_coloring
from .power import Hyperedge, Internal, PowerGraph, Terminal, canonical, fractional_power, power, subdivide

__version__ = "0.1.0"

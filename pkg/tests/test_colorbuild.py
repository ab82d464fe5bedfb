import pytest
from hypothesis import given, settings

from conftest import graphs
from reference import min_edge_colors
from fracpower import colorbuild as cb
from fracpower.corpus import (
    complete_graph,
    connected_graphs,
    cube_graph,
    cycle_graph,
    path_graph,
    petersen_graph,
    star_graph,
)
from fracpower.formulas import chi_cycle_power, chi_path_power, omega_fractional
from fracpower.graph import Graph, max_degree
from fracpower.oracles import chi_exact, exact_coloring, validate_coloring
from fracpower.power import Internal, Terminal, fractional_power, power


def proper(g, c):
    return cb.verify(g, c) is None


# -- subdivision, cycles, paths

@pytest.mark.parametrize("g, n, colors", [
    (complete_graph(4), 2, 2),
    (complete_graph(4), 3, 3),
    (cycle_graph(6), 3, 2),
    (cycle_graph(5), 4, 2),
    (petersen_graph(), 5, 3),
])
def test_color_subdivision(g, n, colors):
    c = cb.color_subdivision(g, n)
    assert proper(g, c)
    assert len(c.used_colors()) == colors == chi_exact(fractional_power(g, 1, n).materialized)


def test_subdivision_even_keeps_terminals_at_zero(k4):
    c = cb.color_subdivision(k4, 4)
    assert all(c.color(Terminal(v)) == 0 for v in range(4))


def test_cycle_and_path_examples():
    assert cb.color_cycle_power(6, 2) == [1, 2, 3, 1, 2, 3]
    seven = cb.color_cycle_power(7, 2)
    assert seven == [1, 2, 3, 4, 1, 2, 3]
    assert cb.color_path_power(5, 3) == [1, 2, 3, 4, 1]


def test_cycle_and_path_colorings_are_optimal():
    for k in range(3, 20):
        for m in range(1, 8):
            cols = cb.color_cycle_power(k, m)
            assert validate_coloring(power(cycle_graph(k), m), cols) is None
            assert len(set(cols)) == chi_cycle_power(k, m)
    for k in range(1, 20):
        for m in range(1, 8):
            cols = cb.color_path_power(k, m)
            assert validate_coloring(power(path_graph(k), m), cols) is None
            assert len(set(cols)) == chi_path_power(k, m)


@pytest.mark.parametrize("g", [cycle_graph(5), cycle_graph(4), path_graph(4), path_graph(1), path_graph(2)])
def test_low_degree_matches_oracle(g):
    for n in range(1, 4):
        for m in range(1, 5):
            c = cb.color_low_degree(g, m, n)
            assert proper(g, c)
            assert len(c.used_colors()) == chi_exact(fractional_power(g, m, n).materialized)


def test_low_degree_rejects_branching():
    with pytest.raises(ValueError):
        cb.color_low_degree(star_graph(3), 2, 3)


# -- edge coloring

def test_misra_gries_examples(k4):
    c5 = cb.misra_gries_edge_coloring(cycle_graph(5))
    assert len(c5.palette) == 3 == min_edge_colors(5, cycle_graph(5).edges)
    ec = cb.misra_gries_edge_coloring(k4)
    assert len(set(ec.colors.values())) <= 4
    single = cb.misra_gries_edge_coloring(Graph(2, [(0, 1)]))
    assert set(single.colors.values()) == {0}


@settings(max_examples=80, deadline=None)
@given(graphs(1, 9))
def test_misra_gries_is_proper(g):
    ec = cb.misra_gries_edge_coloring(g)
    assert set(ec.colors) == g.edges
    for v in range(g.vertex_count):
        around = [ec[(v, u)] for u in g.adjacency[v]]
        assert len(around) == len(set(around))
    assert all(0 <= c <= max_degree(g) for c in ec.colors.values())


# -- m = 2

@pytest.mark.parametrize("g", [complete_graph(4), star_graph(3), petersen_graph(), cube_graph()])
def test_color_2_3(g):
    c = cb.color_2_3(g)
    d = max_degree(g)
    assert proper(g, c)
    assert c.palette == frozenset(range(d + 1))
    for v, col in c.assignment.items():
        if isinstance(v, Terminal):
            assert col == 0
        else:
            assert 1 <= col <= d


def test_color_2_3_petersen_is_optimal(petersen):
    assert chi_exact(fractional_power(petersen, 2, 3).materialized) == 4


@pytest.mark.parametrize("builder", [cb.color_2_4, cb.color_2_5])
@pytest.mark.parametrize("g", [complete_graph(4), star_graph(3), cube_graph()])
def test_color_2_4_and_2_5(builder, g):
    c = builder(g)
    assert proper(g, c)
    assert len(c.used_colors()) == max_degree(g) + 1


def test_builders_reject_low_degree():
    with pytest.raises(ValueError):
        cb.color_2_3(cycle_graph(5))
    with pytest.raises(ValueError):
        cb.color_2_3(Graph(8, list(complete_graph(4).edges) + [(4, 5), (5, 6), (6, 7), (4, 7), (4, 6)]))


# -- lifts and extension

def test_lift_k4(k4):
    c = cb.lift_coloring(k4, 2, 3, cb.color_2_3(k4))
    assert (c.m, c.n) == (2, 6)
    assert proper(k4, c)
    assert c.palette == frozenset(range(4))


def test_lift_from_exact_coloring_of_cycle():
    g = cycle_graph(5)
    pg = fractional_power(g, 2, 3)
    colors = exact_coloring(pg.materialized)
    base = cb.Coloring(m=2, n=3, assignment=dict(zip(pg.names, colors)), palette=frozenset(colors))
    c = cb.lift_coloring(g, 2, 3, base)
    assert c.n == 6 and proper(g, c) and c.palette == base.palette


def test_lift_rejects_improper_input(k4):
    good = cb.color_2_3(k4)
    bad = dict(good.assignment)
    bad[Internal(0, 1, 1)] = bad[Internal(0, 2, 1)]
    with pytest.raises(cb.ConstructionError):
        cb.lift_coloring(k4, 2, 3, cb.Coloring(2, 3, bad, good.palette))
    with pytest.raises(ValueError):
        cb.lift_coloring(k4, 3, 3, good)


def test_lift_preserves_palette_over_corpus():
    for g in connected_graphs(4, 6, 3):
        c = cb.color_2_3(g)
        lifted = cb.lift_coloring(g, 2, 3, c)
        assert lifted.palette == c.palette
        assert proper(g, lifted)


def test_color_2_n_examples(k4, petersen):
    c = cb.color_2_n(k4, 9)
    assert c.n == 9 and proper(k4, c) and len(c.used_colors()) == 4
    c = cb.color_2_n(petersen, 7)
    assert proper(petersen, c) and len(c.used_colors()) == 4


@pytest.mark.parametrize("m, expected", [(1, 2), (2, 4), (3, 5), (4, 7), (5, 8), (6, 10)])
def test_color_m_m1_on_k4(k4, m, expected):
    c = cb.color_m_m1(k4, m)
    assert proper(k4, c)
    assert len(c.used_colors()) == expected == omega_fractional(3, m, m + 1)


@pytest.mark.parametrize("g", [complete_graph(5), star_graph(4), petersen_graph()])
def test_color_m_m1_zero_only_on_terminals(g):
    for m in range(2, 6):
        c = cb.color_m_m1(g, m)
        assert proper(g, c)
        assert len(c.used_colors()) == omega_fractional(max_degree(g), m, m + 1)
        zero = {v for v, col in c.assignment.items() if col == 0}
        assert zero == {Terminal(v) for v in range(g.vertex_count)}


def test_color_m_k_m1(k4):
    c = cb.color_m_k_m1(k4, 2, 2)
    assert c.n == 6 and proper(k4, c)
    assert len(c.used_colors()) == len(cb.color_2_n(k4, 6).used_colors()) == 4
    k5 = complete_graph(5)
    assert len(cb.color_m_k_m1(k5, 2, 2).used_colors()) == 5
    one = cb.color_m_k_m1(k4, 3, 1)
    assert one.assignment == cb.color_m_m1(k4, 3).assignment


def test_extend_by_one_examples():
    k5 = complete_graph(5)
    c = cb.extend_by_one(k5, 2, 6, cb.color_m_k_m1(k5, 2, 2))
    assert c.n == 7 and proper(k5, c) and len(c.palette) == 5
    k6 = complete_graph(6)
    c = cb.extend_by_one(k6, 3, 8, cb.color_m_k_m1(k6, 3, 2))
    assert c.n == 9 and proper(k6, c)
    assert len(c.palette) == 7 == omega_fractional(5, 3, 9)


def test_extend_by_one_preconditions(k4):
    with pytest.raises(ValueError):
        cb.extend_by_one(k4, 2, 5, cb.color_2_5(k4))
    # Δ = 3 leaves only 4 colors for m = 2, below the 2m+1 the extension needs
    with pytest.raises(cb.ConstructionError):
        cb.extend_by_one(k4, 2, 6, cb.color_m_k_m1(k4, 2, 2))


# -- dispatcher and files

@pytest.mark.parametrize("g, m, n, tag, colors", [
    (petersen_graph(), 2, 7, "two-over-n", 4),
    (complete_graph(4), 3, 4, "m-over-m+1", 5),
    (complete_graph(4), 3, 8, "lifted-m-over-m+1", 5),
    (complete_graph(4), 3, 5, cb.FALLBACK, 5),
    (complete_graph(4), 1, 3, "subdivision", 3),
    (cycle_graph(7), 2, 3, "path-cycle-power", 3),
    (complete_graph(6), 3, 9, "extend-by-one", 7),
])
def test_color_fractional_dispatch(g, m, n, tag, colors):
    c, got = cb.color_fractional(g, m, n)
    assert got == tag
    assert proper(g, c)
    assert len(c.used_colors()) == colors


def test_coloring_file_round_trip(k4):
    pg = fractional_power(k4, 3, 4)
    c = cb.color_m_m1(k4, 3)
    text = cb.format_coloring(pg, c)
    assert text.splitlines()[0] == "palette 5"
    back = cb.parse_coloring(text, 3, 4)
    assert back.assignment == c.assignment
    assert back.palette == c.palette


def test_parse_coloring_errors():
    with pytest.raises(ValueError):
        cb.parse_coloring("t0 1\n", 2, 3)

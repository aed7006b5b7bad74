from fractions import Fraction

from hypothesis import given

from conftest import graphs
from oracles import brute_lp_half, brute_min_vc
from mixdom.graph import build, complete_graph, induced_subgraph, path_graph
from mixdom.lpvc import (
    HALF,
    LpPartition,
    check_crown_properties,
    lp_based_vertex_cover,
    solve_lpvc_half_integral,
)
from mixdom.matching import maximum_matching_general


def test_p3_unique_optimum():
    sol, p = solve_lpvc_half_integral(path_graph(3))
    assert sol.values == (0, 1, 0)
    assert sol.objective == 1
    assert p == LpPartition(frozenset({1}), frozenset(), frozenset({0, 2}))


def test_k4_all_half():
    sol, p = solve_lpvc_half_integral(complete_graph(4))
    assert sol.values == (HALF,) * 4
    assert sol.objective == 2
    assert p.Vhalf == {0, 1, 2, 3}


def test_empty_graph():
    sol, p = solve_lpvc_half_integral(build(3, []))
    assert sol.values == (0, 0, 0) and sol.objective == 0
    assert p.V0 == {0, 1, 2}


def test_crown_examples():
    p3 = path_graph(3)
    _, p = solve_lpvc_half_integral(p3)
    assert check_crown_properties(p3, p) == (True, "ok")
    _, p = solve_lpvc_half_integral(complete_graph(4))
    assert check_crown_properties(complete_graph(4), p)[0]
    broken = LpPartition(frozenset(), frozenset(), frozenset({0, 1, 2}))
    ok, msg = check_crown_properties(p3, broken)
    assert not ok and "V0" in msg


def test_crown_matching_clause():
    # V1 = {0, 1} hanging off a single V0 vertex cannot be saturated
    g = build(3, [(0, 2), (1, 2)])
    p = LpPartition(frozenset({0, 1}), frozenset(), frozenset({2}))
    ok, msg = check_crown_properties(g, p)
    assert not ok and "matching" in msg


def test_lp_cover_examples():
    assert lp_based_vertex_cover(path_graph(3)) == {1}
    assert lp_based_vertex_cover(complete_graph(4)) == {0, 1, 2, 3}
    assert len(lp_based_vertex_cover(build(2, [(0, 1)]))) <= 2


@given(graphs(max_n=10))
def test_half_integral_optimal(g):
    sol, p = solve_lpvc_half_integral(g)
    assert set(sol.values) <= {Fraction(0), HALF, Fraction(1)}
    assert sol.is_feasible(g)
    assert sol.objective == sum(sol.values) == brute_lp_half(g.n, g.edges)
    assert p.V0 | p.V1 | p.Vhalf == set(range(g.n))
    assert check_crown_properties(g, p)[0]


@given(graphs(max_n=10))
def test_half_part_bounds(g):
    _, p = solve_lpvc_half_integral(g)
    sub, _ = induced_subgraph(g, p.Vhalf)
    mstar = len(maximum_matching_general(sub))
    assert brute_min_vc(sub.n, sub.edges) >= len(p.Vhalf) - mstar
    assert brute_min_vc(g.n, g.edges) >= len(p.V1) + len(p.Vhalf) - mstar
    cover = lp_based_vertex_cover(g)
    assert all(u in cover or v in cover for u, v in g.edges)
    assert len(cover) <= 2 * brute_min_vc(g.n, g.edges)

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from conftest import graphs
from mixdom.domination import (
    ForeignElementError,
    MixedSet,
    Regime,
    WeightConfig,
    closure_vertices,
    is_mixed_dominating_set,
    is_vertex_cover,
    solution_from_json,
    solution_to_json,
    weight,
)
from mixdom.graph import build, cycle_graph, isolated_vertices, path_graph
from mixdom.solvers import exact_vertex_cover

W = WeightConfig(1, "3/2")


def test_star_center_dominates_p3():
    assert is_mixed_dominating_set(path_graph(3), MixedSet([1])) == (True, None)


def test_c4_single_edge_fails_with_edge_witness():
    ok, witness = is_mixed_dominating_set(cycle_graph(4), MixedSet(edges=[(0, 1)]))
    assert not ok
    assert witness == ("edge", (2, 3))


def test_foreign_elements_rejected():
    g = path_graph(3)
    with pytest.raises(ForeignElementError):
        is_mixed_dominating_set(g, MixedSet([5]))
    with pytest.raises(ForeignElementError):
        is_mixed_dominating_set(g, MixedSet(edges=[(0, 2)]))


@pytest.mark.parametrize("d,expected", [
    (MixedSet([1]), Fraction(1)),
    (MixedSet(edges=[(0, 1), (2, 3)]), Fraction(3)),
    (MixedSet([0], [(1, 2)]), Fraction(5, 2)),
])
def test_weight(d, expected):
    assert weight(d, W).value == expected


def test_weight_breakdown_is_exact():
    wv = weight(MixedSet([0, 1], [(2, 3)]), WeightConfig("1/3", "0.1"))
    assert (wv.value, wv.n_vertices, wv.n_edges) == (Fraction(2, 3) + Fraction(1, 10), 2, 1)


def test_closure_vertices():
    assert closure_vertices(MixedSet([0], [(1, 2)])) == {0, 1, 2}
    assert closure_vertices(MixedSet(edges=[(0, 1)])) == {0, 1}
    assert closure_vertices(MixedSet([0], [(0, 1)])) == {0, 1}


def test_is_vertex_cover():
    c4 = cycle_graph(4)
    assert is_vertex_cover(c4, {0, 2})
    assert not is_vertex_cover(c4, {0})
    assert is_vertex_cover(c4, range(4))


@pytest.mark.parametrize("wv,we,regime", [
    (1, 2, Regime.EDGE_HEAVY),
    (1, 3, Regime.EDGE_HEAVY),
    (0, 0, Regime.EDGE_HEAVY),
    (1, 1, Regime.VERTEX_FAVORABLE_TIGHT),
    (2, 3, Regime.VERTEX_FAVORABLE_TIGHT),
    ("1", "1.999", Regime.VERTEX_FAVORABLE_TIGHT),
    (2, 1, Regime.EDGE_FAVORABLE),
])
def test_regime_boundaries(wv, we, regime):
    assert WeightConfig(wv, we).regime is regime


def test_weight_config_rejects_bad_input():
    with pytest.raises(ValueError):
        WeightConfig(-1, 1)
    with pytest.raises(TypeError):
        WeightConfig(1.5, 1)
    assert WeightConfig("1.5", "3/2").w_v == WeightConfig("3/2", 1).w_v == Fraction(3, 2)


def test_solution_json_roundtrip():
    d = MixedSet([3, 1], [(2, 0)])
    obj = solution_to_json(d, W)
    assert obj == {"vertices": [1, 3], "edges": [[0, 2]], "wv": "1/1", "we": "3/2", "weight": "7/2"}
    assert solution_from_json(obj) == d


def mixed_subsets(g):
    return st.builds(
        MixedSet,
        st.sets(st.sampled_from(range(g.n))) if g.n else st.just(set()),
        st.sets(st.sampled_from(g.edges)) if g.m else st.just(set()),
    )


@given(st.data())
def test_structural_properties(data):
    g = data.draw(graphs(max_n=7))
    d = data.draw(mixed_subsets(g))
    valid, _ = is_mixed_dominating_set(g, d)
    if valid:
        # isolated vertices are forced, V(D) is a vertex cover
        assert isolated_vertices(g) <= d.vertices
        assert is_vertex_cover(g, closure_vertices(d))
        tau = len(exact_vertex_cover(g))
        assert 2 * len(d) >= len(d.vertices) + 2 * len(d.edges) >= tau
    cl = closure_vertices(d)
    assert d.vertices <= cl and len(cl) <= len(d.vertices) + 2 * len(d.edges)


@given(st.data())
def test_vertex_covers_dominate(data):
    g = data.draw(graphs(max_n=7))
    if isolated_vertices(g):
        return
    cover = set()
    for u, v in g.edges:
        if u not in cover and v not in cover:
            cover.add(data.draw(st.sampled_from((u, v))))
    cover |= data.draw(st.sets(st.sampled_from(range(g.n)))) if g.n else set()
    assert is_mixed_dominating_set(g, MixedSet(cover))[0]


@given(st.data())
def test_weight_monotone(data):
    g = data.draw(graphs(min_n=1, max_n=6))
    d = data.draw(mixed_subsets(g))
    w = WeightConfig(data.draw(st.fractions(0, 5)), data.draw(st.fractions(0, 5)))
    bigger = MixedSet(d.vertices | {0}, d.edges)
    assert weight(bigger, w).value >= weight(d, w).value

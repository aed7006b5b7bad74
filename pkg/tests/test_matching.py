import pytest
from hypothesis import given

from conftest import graphs
from oracles import brute_max_matching, brute_min_vc, two_coloring
from mixdom.graph import (
    build,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    path_graph,
    petersen_graph,
    star_graph,
)
from mixdom.matching import (
    MatchingError,
    greedy_maximal_matching,
    is_matching,
    koenig_min_vertex_cover,
    matched_vertices,
    maximum_matching_bipartite,
    maximum_matching_general,
)


def test_greedy_examples():
    assert greedy_maximal_matching(build(2, [(0, 1)])) == {(0, 1)}
    assert greedy_maximal_matching(path_graph(3)) == {(0, 1)}
    assert greedy_maximal_matching(build(0, [])) == frozenset()


def test_bipartite_examples():
    assert len(maximum_matching_bipartite(cycle_graph(4), {0, 2}, {1, 3})) == 2
    assert len(maximum_matching_bipartite(star_graph(3), {0}, {1, 2, 3})) == 1
    # brute force over all matchings of K_{2,3} gives 2
    assert len(maximum_matching_bipartite(complete_bipartite(2, 3), {0, 1}, {2, 3, 4})) == 2


def test_bipartite_rejects_non_bipartition():
    with pytest.raises(MatchingError):
        maximum_matching_bipartite(complete_graph(3), {0}, {1, 2})


@pytest.mark.parametrize("g,size", [
    (complete_graph(3), 1),
    (cycle_graph(5), 2),  # brute force
    (petersen_graph(), 5),  # brute force
])
def test_blossom_examples(g, size):
    mm = maximum_matching_general(g)
    assert len(mm) == size
    assert is_matching(mm) and mm <= g.edge_set


def test_blossom_needs_contraction():
    # the greedy warm start leaves an odd cycle that must be shrunk:
    # triangle 0-1-2 with pendant paths 2-3 and 0-4-5
    g = build(6, [(0, 1), (1, 2), (0, 2), (2, 3), (0, 4), (4, 5)])
    assert len(maximum_matching_general(g)) == 3


def test_koenig_examples():
    c4 = cycle_graph(4)
    mm = maximum_matching_bipartite(c4, {0, 2}, {1, 3})
    assert len(koenig_min_vertex_cover(c4, {0, 2}, {1, 3}, mm)) == 2
    s = star_graph(3)
    mm = maximum_matching_bipartite(s, {0}, {1, 2, 3})
    assert koenig_min_vertex_cover(s, {0}, {1, 2, 3}, mm) == {0}
    p4 = path_graph(4)
    mm = maximum_matching_bipartite(p4, {0, 2}, {1, 3})
    assert len(koenig_min_vertex_cover(p4, {0, 2}, {1, 3}, mm)) == 2


def test_koenig_detects_non_maximum_matching():
    p4 = path_graph(4)
    with pytest.raises(MatchingError):
        koenig_min_vertex_cover(p4, {0, 2}, {1, 3}, [(1, 2)])


@given(graphs(max_n=10))
def test_blossom_matches_brute_force(g):
    mm = maximum_matching_general(g)
    assert is_matching(mm) and mm <= g.edge_set
    assert len(mm) == brute_max_matching(g.n, g.edges)


@given(graphs(max_n=10))
def test_greedy_is_maximal(g):
    mm = greedy_maximal_matching(g)
    assert is_matching(mm)
    hit = matched_vertices(mm)
    assert all(u in hit or v in hit for u, v in g.edges)


@given(graphs(max_n=10))
def test_bipartite_engines_agree(g):
    sides = two_coloring(g.n, g.edges)
    if sides is None:
        return
    left, right = sides
    mm = maximum_matching_bipartite(g, left, right)
    assert is_matching(mm)
    assert len(mm) == len(maximum_matching_general(g))
    cover = koenig_min_vertex_cover(g, left, right, mm)
    assert all(u in cover or v in cover for u, v in g.edges)
    assert len(cover) == brute_min_vc(g.n, g.edges)

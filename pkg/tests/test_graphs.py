from __future__ import annotations

import itertools

import networkx as nx
import pytest

from bookembed.graphs import (
    GraphError,
    complete_bipartite_graph,
    complete_graph,
    complete_pagenumber,
    components,
    cycle_graph,
    family_graph,
    is_connected,
    is_linear_forest,
    is_outerplanar,
    is_path,
    is_planar,
    is_tree,
    make_graph,
    mobius_ladder,
    path_graph,
    petersen_graph,
    star_graph,
    tree_from_parents,
)
from bookembed.expansion import complete_expansion


def test_make_graph_path():
    g = make_graph(3, [(0, 1), (1, 2)])
    assert g.edges == ((0, 1), (1, 2))
    assert g.degrees == (1, 2, 1)


def test_make_graph_collapses_reversed_duplicate():
    g = make_graph(4, [(0, 1), (1, 0)])
    assert g.edges == ((0, 1),) and g.m == 1


def test_make_graph_normalises_and_sorts():
    g = make_graph(4, [(3, 1), (2, 0), (1, 0)])
    assert g.edges == ((0, 1), (0, 2), (1, 3))
    assert g.adjacency[0] == (1, 2)
    assert g.edge_id(3, 1) == 2


@pytest.mark.parametrize("pairs", [[(0, 0)], [(0, 2)], [(-1, 0)]])
def test_make_graph_rejects(pairs):
    with pytest.raises(GraphError):
        make_graph(2, pairs)


def test_complete_four():
    g = complete_graph(4)
    assert (g.n, g.m) == (4, 6) and set(g.degrees) == {3}


def test_mobius_three_is_k33():
    g = mobius_ladder(3)
    # every edge joins an even and an odd vertex, and all 9 such pairs are edges
    assert all((u - v) % 2 for u, v in g.edges)
    assert g.m == 9
    assert nx.is_isomorphic(g.to_networkx(), complete_bipartite_graph(3, 3).to_networkx())


def test_mobius_counts():
    for h in range(3, 9):
        g = mobius_ladder(h)
        assert (g.n, g.m) == (2 * h, 3 * h) and set(g.degrees) == {3}


def test_petersen_facts():
    g = petersen_graph()
    assert (g.n, g.m) == (10, 15) and set(g.degrees) == {3}
    assert nx.girth(g.to_networkx()) == 5
    assert nx.is_isomorphic(g.to_networkx(), nx.petersen_graph())


def test_star_eight():
    g = star_graph(8)
    assert (g.n, g.m, g.max_degree) == (9, 8, 8)
    assert g.adjacency[0] == tuple(range(1, 9))


def test_tree_from_parents():
    t = tree_from_parents([0, 0, 1, 1])
    assert t.n == 5 and is_tree(t)
    with pytest.raises(GraphError):
        tree_from_parents([0, 2])


@pytest.mark.parametrize(
    "kind, params",
    [("path", (1,)), ("cycle", (2,)), ("star", (0,)), ("complete", (0,)), ("mobius_ladder", (2,))],
)
def test_family_minimums(kind, params):
    with pytest.raises(GraphError):
        family_graph(kind, *params)


def test_family_dispatch_is_deterministic():
    assert family_graph("mobius_ladder", 4) == mobius_ladder(4)
    assert family_graph("petersen").edges == petersen_graph().edges
    assert family_graph("complete_bipartite", 2, 3) == complete_bipartite_graph(2, 3)


def test_connectivity():
    assert is_connected(path_graph(5))
    assert not is_connected(make_graph(4, [(0, 1), (2, 3)]))
    assert is_connected(petersen_graph())
    assert is_connected(make_graph(1, []))
    assert components(make_graph(4, [(0, 1), (2, 3)])) == [[0, 1], [2, 3]]


def test_planarity_examples():
    assert is_planar(complete_graph(4))
    assert not is_planar(complete_graph(5))
    assert not is_planar(complete_expansion(mobius_ladder(3)).graph)
    assert not is_planar(complete_expansion(petersen_graph()).graph)


def test_expansion_of_k5_passes_euler_but_is_nonplanar():
    x = complete_expansion(complete_graph(5)).graph
    assert x.m <= 3 * x.n - 6
    assert not is_planar(x)


def test_outerplanarity():
    assert is_outerplanar(cycle_graph(7))
    assert not is_outerplanar(complete_graph(4))
    assert not is_outerplanar(complete_bipartite_graph(2, 3))
    assert is_outerplanar(star_graph(5))


def test_shape_predicates():
    assert is_path(path_graph(4)) and not is_path(cycle_graph(4))
    assert is_linear_forest(make_graph(5, [(0, 1), (3, 4)]))
    assert not is_linear_forest(star_graph(3))


def test_complete_pagenumber_small_cases():
    # K_3 is a triangle and fits on one page, below ceil(3/2)
    assert [complete_pagenumber(d) for d in range(1, 9)] == [0, 0, 1, 2, 3, 3, 4, 4]


def test_planarity_matches_networkx_on_small_graphs():
    for n in range(1, 6):
        pairs = list(itertools.combinations(range(n), 2))
        for mask in range(0, 1 << len(pairs), 7):
            g = make_graph(n, [p for i, p in enumerate(pairs) if mask >> i & 1])
            assert is_planar(g) == nx.check_planarity(g.to_networkx())[0]

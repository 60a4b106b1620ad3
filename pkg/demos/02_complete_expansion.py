"""
The complete expansion of a graph
=================================

Replace every vertex of degree d by a clique K_d, one clique vertex per
incident edge, and keep each original edge as a single link between the
two cliques. The result keeps the shape of the original graph while every
vertex now has a small dense neighbourhood.
"""

from math import comb

from bookembed import check_expansion_properties, complete_expansion, subgraph_expansion_test
from bookembed.graphs import complete_graph, cycle_graph, path_graph, petersen_graph, star_graph

for name, g in [("K_4", complete_graph(4)), ("S_9", star_graph(8)), ("Petersen", petersen_graph())]:
    xg = complete_expansion(g)
    formula = g.m + sum(comb(d, 2) for d in g.degrees)
    print(f"{name:9s} n={g.n:2d} m={g.m:2d}  ->  expansion n={xg.graph.n:2d} m={xg.graph.m:2d} "
          f"(formula {formula}), clique sizes {sorted({len(b) for b in xg.clique_of})}")

# Paths and cycles expand to longer paths and cycles.
print("E_c(P_3) edges:", complete_expansion(path_graph(3)).graph.edges)

# Provenance: which clique vertex stands for (vertex, edge)?
xg = complete_expansion(complete_graph(4))
print("clique of vertex 1:", xg.clique_of[1], "origins:", [xg.vertex_origin[x] for x in xg.clique_of[1]])
print("link for source edge 0:", xg.graph.edges[xg.link_edge[0]])

# The structural checks come back empty for a genuine expansion.
print("clause report:", check_expansion_properties(xg))

# Subgraphs expand to subgraphs, so pagenumbers can only grow with G.
print("E_c(P_4) inside E_c(C_4):", subgraph_expansion_test(path_graph(4), cycle_graph(4)))

"""
From an embedding of G to one of its expansion
==============================================

Any t-page embedding of G can be blown up into an embedding of E_c(G): each
spine vertex becomes a run of its clique's vertices, links keep the page of
their source edge, and the cliques share ceil(d/2) fresh pages. On small
random graphs we compare that bound with the certified answer.
"""

import random

from bookembed import SearchBudget, complete_expansion, expand_embedding, make_graph, pagenumber_exact
from bookembed.constructions import ceil_half

rng = random.Random(11)
budget = SearchBudget(max_nodes=300_000, max_seconds=20)
print(f"{'n':>2s} {'m':>2s} {'max deg':>7s} {'pn(G)':>5s} {'built':>5s} {'bound':>5s} {'pn(E_c)':>7s}")
for _ in range(8):
    n = rng.randint(4, 7)
    edges = {(rng.randrange(i), i) for i in range(1, n)}
    edges |= {(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.15}
    g = make_graph(n, edges)
    cert = pagenumber_exact(g, budget)
    built = expand_embedding(g, cert.witness)
    xg = complete_expansion(g)
    exact = pagenumber_exact(xg.graph, budget, expansion=xg) if xg.graph.n <= 14 else None
    shown = (exact.value if exact.exact else "?") if exact else "-"
    print(f"{n:2d} {g.m:2d} {g.max_degree:7d} {cert.value:5d} {built.num_pages:5d} "
          f"{cert.value + ceil_half(g.max_degree):5d} {shown!s:>7s}")

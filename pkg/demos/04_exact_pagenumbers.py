"""
Certified pagenumbers
=====================

The solver walks through spine orders depth first and prunes a partial
spine as soon as the crossings it already fixes need more pages than
allowed. A certificate pairs a witness embedding with a refutation one page
below: either the search space was exhausted, or a structural bound
(nonplanar graphs need 3 pages) settles it once the search budget runs out.
"""

import time

from bookembed import SearchBudget, complete_expansion, pagenumber_exact
from bookembed.graphs import complete_graph, petersen_graph


def show(name, g, expansion=None, budget=SearchBudget(max_seconds=30)):
    start = time.monotonic()
    cert = pagenumber_exact(g, budget, expansion=expansion)
    proof = cert.infeasibility_proof
    how = f"{proof.search} at {proof.pages}" if proof else "path"
    if proof and proof.reason:
        how += f" ({proof.reason})"
    lo, hi = cert.bounds_used
    value = cert.value if cert.exact else f"[{lo},{hi}]"
    print(f"{name:10s} {cert.status:6s} {value!s:6s} {how:32s} {time.monotonic() - start:5.1f}s")


for n in (4, 5, 6):
    show(f"K_{n}", complete_graph(n))
show("Petersen", petersen_graph())

# Expansion graphs: provenance lets the solver use the matching construction.
for n, budget in [(4, SearchBudget()), (5, SearchBudget(max_seconds=5)), (7, SearchBudget(max_seconds=5))]:
    xg = complete_expansion(complete_graph(n))
    show(f"E_c(K_{n})", xg.graph, xg, budget)

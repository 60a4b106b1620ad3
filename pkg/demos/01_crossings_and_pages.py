"""
Crossings, pages and the spine
==============================

A book embedding puts the vertices on a line (the spine) and gives every
edge a page. Two edges on the same page cross exactly when their endpoints
alternate along the spine. Edges between spine neighbours are drawn on the
spine itself (page 0) and cost nothing, so a path needs no pages at all.
"""

from pathlib import Path

from bookembed import BookEmbedding, conflict_graph, edges_cross, min_pages_fixed_spine, validate_embedding
from bookembed.book import first_fit_pages
from bookembed.graphs import complete_graph, cycle_graph
from bookembed.render import RenderOptions, render_arc_diagram

out = Path("demo_output")
out.mkdir(exist_ok=True)

# The crossing rule only looks at positions along the spine.
pos = {v: v for v in range(4)}
print("(0,2) vs (1,3):", edges_cross(pos, (0, 2), (1, 3)))  # alternate
print("(0,3) vs (1,2):", edges_cross(pos, (0, 3), (1, 2)))  # nested

# A 4-cycle: three spine edges and one arc over the top.
c4 = cycle_graph(4)
emb = BookEmbedding((0, 1, 2, 3), {(0, 1): 0, (1, 2): 0, (2, 3): 0, (0, 3): 1})
print("C_4 report:", validate_embedding(c4, emb), "pages:", emb.num_pages)

# Squeezing K_4 onto a single page fails in exactly one place.
k4 = complete_graph(4)
bad = BookEmbedding((0, 1, 2, 3), {e: 1 for e in k4.edges})
print("K_4 on one page:", validate_embedding(k4, bad))
(out / "k4_one_page.svg").write_text(render_arc_diagram(k4, bad, RenderOptions(title="K_4 forced onto one page")))

# With the spine fixed, paging is colouring the conflict graph.
k6 = complete_graph(6)
print("K_6 conflict edges on the natural spine:", conflict_graph(k6, range(6)).graph.m)
print("first-fit pages:", first_fit_pages(k6, range(6)).num_pages)
k, best = min_pages_fixed_spine(k6, range(6), 6)
print("optimal pages on that spine:", k)
(out / "k6.svg").write_text(render_arc_diagram(k6, best, RenderOptions(split_pages=True, title="K_6 in 3 pages")))

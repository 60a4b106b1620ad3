"""
Explicit layouts for expansion graphs
=====================================

Each family gets a hand-built spine order and page assignment. Every layout
is re-checked by the validator when it is produced, and the page count is
compared with a lower bound, which is usually the pagenumber of the largest
clique. Equal numbers mean the layout is optimal.
"""

import random
from pathlib import Path

from bookembed import (
    embed_expansion_complete,
    embed_expansion_mobius,
    embed_expansion_petersen,
    embed_expansion_star,
    embed_expansion_tree,
    expansion_lower_bound,
)
from bookembed.graphs import complete_graph, mobius_ladder, petersen_graph, star_graph, tree_from_parents
from bookembed.render import RenderOptions, render_arc_diagram

out = Path("demo_output")
out.mkdir(exist_ok=True)

rng = random.Random(5)
tree = tree_from_parents([rng.randrange(i) for i in range(1, 25)])

rows = [
    ("star S_9", embed_expansion_star(8), star_graph(8)),
    (f"random tree, max degree {tree.max_degree}", embed_expansion_tree(tree), tree),
    ("Mobius ladder M_6", embed_expansion_mobius(6), mobius_ladder(6)),
    ("Petersen", embed_expansion_petersen(), petersen_graph()),
    ("K_6", embed_expansion_complete(6), complete_graph(6)),
    ("K_5", embed_expansion_complete(5), complete_graph(5)),
    ("K_7", embed_expansion_complete(7), complete_graph(7)),
]
print(f"{'source':32s} {'vertices':>8s} {'pages':>5s} {'lower':>5s}  reason")
for name, built, source in rows:
    lower, reason = expansion_lower_bound(source)
    print(f"{name:32s} {built.expansion.graph.n:8d} {built.num_pages:5d} {lower:5d}  {reason}")

# Arc diagrams, one panel per page.
for name, built in [("star9", rows[0][1]), ("k5", rows[5][1]), ("k6", rows[4][1])]:
    svg = render_arc_diagram(built.expansion.graph, built.emb, RenderOptions(split_pages=True))
    (out / f"expansion_{name}.svg").write_text(svg)
print("diagrams written to", out.resolve())

"""Book embeddings and pagenumbers of complete expansion graphs."""

from __future__ import annotations

from .book import (
    BookEmbedding,
    Crossing,
    StructuralViolation,
    conflict_graph,
    edges_cross,
    first_fit_pages,
    is_valid,
    min_pages_fixed_spine,
    validate_embedding,
)
from .constructions import (
    ExpansionEmbedding,
    construct_for_source,
    embed_complete,
    embed_expansion_complete,
    embed_expansion_mobius,
    embed_expansion_petersen,
    embed_expansion_star,
    embed_expansion_tree,
    expand_embedding,
    expansion_lower_bound,
)
from .expansion import (
    ExpansionGraph,
    check_expansion_properties,
    complete_expansion,
    subgraph_expansion_test,
)
from .graphs import (
    Graph,
    GraphError,
    family_graph,
    is_connected,
    is_outerplanar,
    is_planar,
    make_graph,
)
from .render import RenderOptions, render_arc_diagram
from .solver import (
    PageNumberCertificate,
    SearchBudget,
    decide_pages,
    pagenumber_bounds,
    pagenumber_exact,
)

__version__ = "0.1.0"

__all__ = [
    "BookEmbedding",
    "Crossing",
    "ExpansionEmbedding",
    "ExpansionGraph",
    "Graph",
    "GraphError",
    "PageNumberCertificate",
    "RenderOptions",
    "SearchBudget",
    "StructuralViolation",
    "check_expansion_properties",
    "complete_expansion",
    "conflict_graph",
    "construct_for_source",
    "decide_pages",
    "edges_cross",
    "embed_complete",
    "embed_expansion_complete",
    "embed_expansion_mobius",
    "embed_expansion_petersen",
    "embed_expansion_star",
    "embed_expansion_tree",
    "expand_embedding",
    "expansion_lower_bound",
    "family_graph",
    "first_fit_pages",
    "is_connected",
    "is_outerplanar",
    "is_planar",
    "is_valid",
    "make_graph",
    "min_pages_fixed_spine",
    "pagenumber_bounds",
    "pagenumber_exact",
    "render_arc_diagram",
    "subgraph_expansion_test",
    "validate_embedding",
]

"""The complete expansion transformation.

Every source vertex ``v`` of degree ``d`` becomes a clique ``K_d`` whose
vertices are the pairs ``(v, e)`` for the edges ``e`` at ``v``; every source
edge ``e = uv`` becomes the single *link* edge ``(u, e)--(v, e)``.
Expansion vertices are numbered clique by clique in source-vertex order, and
inside a clique by EdgeId, so the output is canonical.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import combinations

from .graphs import Graph, GraphError, make_graph


class EdgeClass(str, Enum):
    CLIQUE = "E1"
    LINK = "E2"


@dataclass(frozen=True)
class ExpansionGraph:
    graph: Graph
    source: Graph
    vertex_origin: tuple[tuple[int, int], ...]  # expansion vertex -> (source vertex, source EdgeId)
    clique_of: tuple[tuple[int, ...], ...]  # source vertex -> its clique
    link_edge: tuple[int, ...]  # source EdgeId -> expansion EdgeId
    edge_class: tuple[EdgeClass, ...]  # expansion EdgeId -> E1 / E2

    def vertex(self, v: int, e: int) -> int:
        """Expansion vertex ``(v, e)`` for source vertex ``v`` and source EdgeId ``e``."""
        for x in self.clique_of[v]:
            if self.vertex_origin[x][1] == e:
                return x
        raise KeyError((v, e))

    def owner(self, x: int) -> int:
        return self.vertex_origin[x][0]


def complete_expansion(g: Graph) -> ExpansionGraph:
    origin: list[tuple[int, int]] = []
    cliques: list[tuple[int, ...]] = []
    slot: dict[tuple[int, int], int] = {}
    incident: list[list[int]] = [[] for _ in range(g.n)]
    for eid, (u, v) in enumerate(g.edges):
        incident[u].append(eid)
        incident[v].append(eid)
    for v in range(g.n):
        block = []
        for eid in incident[v]:
            slot[(v, eid)] = len(origin)
            block.append(len(origin))
            origin.append((v, eid))
        cliques.append(tuple(block))

    clique_edges = [pair for block in cliques for pair in combinations(block, 2)]
    links = [(slot[(u, eid)], slot[(v, eid)]) for eid, (u, v) in enumerate(g.edges)]
    x = make_graph(len(origin), clique_edges + links)

    link_edge = tuple(x.edge_id(a, b) for a, b in links)
    link_set = set(link_edge)
    edge_class = tuple(
        EdgeClass.LINK if i in link_set else EdgeClass.CLIQUE for i in range(x.m)
    )
    return ExpansionGraph(x, g, tuple(origin), tuple(cliques), link_edge, edge_class)


def check_expansion_properties(xg: ExpansionGraph) -> list[str]:
    """Check the four structural clauses of the transformation.

    Edge classes are recomputed from ``clique_of`` (an edge inside one clique
    is E1, an edge between cliques is E2), so a tampered graph is judged on
    its actual edges. Returns human-readable violations; empty means pass.
    """
    g, x = xg.source, xg.graph
    problems: list[str] = []

    # (1) distinct source vertices have disjoint cliques, and cliques cover V
    owner: dict[int, int] = {}
    for v, block in enumerate(xg.clique_of):
        for a in block:
            if a in owner:
                problems.append(f"(1) expansion vertex {a} lies in cliques of {owner[a]} and {v}")
            else:
                owner[a] = v
    missing = set(range(x.n)) - owner.keys()
    if missing:
        problems.append(f"(1) expansion vertices {sorted(missing)} belong to no clique")
    for v, block in enumerate(xg.clique_of):
        if len(block) != g.degree(v):
            problems.append(f"(1) clique of {v} has {len(block)} vertices, degree is {g.degree(v)}")
        for a, b in combinations(block, 2):
            if not x.has_edge(a, b):
                problems.append(f"(1) clique of {v} misses edge ({a}, {b})")

    between: dict[tuple[int, int], int] = {}
    cut = [0] * g.n
    links_at = [0] * x.n
    for a, b in x.edges:
        oa, ob = owner.get(a), owner.get(b)
        if oa is None or ob is None or oa == ob:
            continue
        key = (oa, ob) if oa < ob else (ob, oa)
        between[key] = between.get(key, 0) + 1
        cut[oa] += 1
        cut[ob] += 1
        links_at[a] += 1
        links_at[b] += 1

    # (2) exactly one link per source edge, none for non-edges
    for u, v in g.edges:
        count = between.get((u, v), 0)
        if count != 1:
            problems.append(f"(2) source edge ({u}, {v}) realised by {count} link edges")
    for key, count in sorted(between.items()):
        if not g.has_edge(*key):
            problems.append(f"(2) {count} link edge(s) between cliques of non-adjacent {key}")

    # (3) boundary of each clique has size d_G(v)
    for v in range(g.n):
        if cut[v] != g.degree(v):
            problems.append(f"(3) cut around clique of {v} has {cut[v]} edges, degree is {g.degree(v)}")

    # (4) an expansion vertex carries at most one link
    for a in range(x.n):
        if links_at[a] > 1:
            problems.append(f"(4) expansion vertex {a} carries {links_at[a]} link edges")
    return problems


def subgraph_expansion_test(h: Graph, g: Graph) -> bool:
    """Whether E_c(h) sits inside E_c(g) along the provenance maps.

    ``h`` must be a labelled subgraph of ``g`` (same vertex ids, edge subset);
    otherwise :class:`GraphError` is raised.
    """
    if h.n > g.n or not all(g.has_edge(u, v) for u, v in h.edges):
        raise GraphError("h is not a labelled subgraph of g")
    xh, xgg = complete_expansion(h), complete_expansion(g)
    image = []
    for v, eid in xh.vertex_origin:
        image.append(xgg.vertex(v, g.edge_id(*h.edges[eid])))
    if len(set(image)) != len(image):
        return False
    for i, (a, b) in enumerate(xh.graph.edges):
        ia, ib = image[a], image[b]
        if not xgg.graph.has_edge(ia, ib):
            return False
        if xh.owner(a) != xgg.owner(ia):
            return False
        if xh.edge_class[i] is not xgg.edge_class[xgg.graph.edge_id(ia, ib)]:
            return False
    return True

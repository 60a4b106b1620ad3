"""Explicit spine orders and page partitions for expansion graphs.

Each embedder builds its layout in closed form, then runs the validator on
the result before returning it; a failed check raises
:class:`ConstructionError` (a bug, never an expected outcome).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .book import BookEmbedding, validate_embedding
from .expansion import ExpansionGraph, complete_expansion
from .graphs import (
    Edge,
    Graph,
    GraphError,
    complete_graph,
    complete_pagenumber,
    is_complete,
    is_connected,
    is_outerplanar,
    is_path,
    is_planar,
    is_tree,
    mobius_ladder,
    petersen_graph,
    star_graph,
)


class ConstructionError(RuntimeError):
    """A construction produced an embedding that failed validation."""


@dataclass(frozen=True)
class ExpansionEmbedding:
    expansion: ExpansionGraph
    emb: BookEmbedding
    claimed_pages: int
    theorem_tag: str

    @property
    def num_pages(self) -> int:
        return self.emb.num_pages


def _key(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


def _checked(g: Graph, emb: BookEmbedding, what: str) -> BookEmbedding:
    problems = validate_embedding(g, emb)
    if problems:
        raise ConstructionError(f"{what}: {len(problems)} problem(s), first {problems[0]}")
    return emb


def _finish(xg: ExpansionGraph, emb: BookEmbedding, claimed: int, tag: str) -> ExpansionEmbedding:
    emb = _checked(xg.graph, emb.with_spine_edges_lowered().compact(), tag)
    if emb.num_pages > claimed:
        raise ConstructionError(f"{tag}: {emb.num_pages} pages exceed the claimed {claimed}")
    return ExpansionEmbedding(xg, emb, claimed, tag)


def ceil_half(d: int) -> int:
    return (d + 1) // 2


# -------------------------------------------------------------------
#   Complete graphs
# -------------------------------------------------------------------


def zigzag_page(x: int, y: int, n_even: int) -> int:
    """Page (1-based) of chord ``{x, y}`` in the zigzag decomposition of K_{n_even}.

    Page ``k`` holds the chords whose endpoint sum is ``2k-2`` or ``2k-1``
    modulo ``n_even``: the zigzag path ``k-1, k, k-2, k+1, ...`` around the
    circle. Each page is a non-crossing Hamiltonian path.
    """
    return ((x + y) % n_even) // 2 + 1


def clique_pages(d: int) -> dict[Edge, int]:
    """Pages for K_d on positions ``0..d-1`` using ``max(1, ceil(d/2))`` pages.

    Every edge gets a proper page (nothing relies on spine adjacency), so the
    partition stays valid when other vertices are inserted between positions.
    """
    if d <= 3:
        return {e: 1 for e in combinations(range(d), 2)}
    n_even = d + d % 2
    return {(x, y): zigzag_page(x, y, n_even) for x, y in combinations(range(d), 2)}


def embed_complete(n: int) -> BookEmbedding:
    """K_n on the natural spine in ``complete_pagenumber(n)`` pages.

    Odd ``n`` uses the zigzag pages of K_{n+1} with the last vertex removed.
    """
    if n < 2:
        raise GraphError("embed_complete needs n >= 2")
    g = complete_graph(n)
    emb = BookEmbedding(tuple(range(n)), clique_pages(n))
    return _checked(g, emb.with_spine_edges_lowered().compact(), f"K_{n}")


# -------------------------------------------------------------------
#   Trees and stars
# -------------------------------------------------------------------


def _path_spine(g: Graph) -> list[int]:
    start = next(v for v in range(g.n) if g.degree(v) <= 1)
    order, prev = [start], -1
    while len(order) < g.n:
        cur = order[-1]
        nxt = next(w for w in g.adjacency[cur] if w != prev)
        prev = cur
        order.append(nxt)
    return order


def _path_embedding(g: Graph) -> BookEmbedding:
    return BookEmbedding(tuple(_path_spine(g)), {e: 0 for e in g.edges})


def embed_expansion_tree(t: Graph) -> ExpansionEmbedding:
    """E_c(T) with as many pages as the largest clique needs.

    Rooted at vertex 0. Each clique is laid out with its parent slot first;
    directly after the slot that links to a child comes the whole layout of
    that child's subtree. All link edges are therefore spine-consecutive, and
    every subtree sits inside a gap between two consecutive slots of its
    parent clique, so edges of different cliques are nested or side by side.
    """
    if not is_tree(t):
        raise GraphError("embed_expansion_tree needs a tree")
    xg = complete_expansion(t)
    if t.max_degree <= 2:
        return _finish(xg, _path_embedding(xg.graph), 0, "tree")

    spine: list[int] = []
    parent = [-1] * t.n
    page_of: dict[Edge, int] = {}
    # iterative DFS: stack of (vertex, remaining child list)
    stack: list[tuple[int, list[int]]] = []

    def open_block(v: int) -> None:
        block = []
        if parent[v] >= 0:
            block.append(xg.vertex(v, t.edge_id(v, parent[v])))
        children = [w for w in t.adjacency[v] if w != parent[v]]
        block += [xg.vertex(v, t.edge_id(v, w)) for w in children]
        for (i, j), p in clique_pages(len(block)).items():
            page_of[_key(block[i], block[j])] = p
        if parent[v] >= 0:
            spine.append(block[0])
        stack.append((v, children))

    open_block(0)
    while stack:
        v, children = stack[-1]
        if not children:
            stack.pop()
            continue
        w = children.pop(0)
        parent[w] = v
        spine.append(xg.vertex(v, t.edge_id(v, w)))
        open_block(w)
    for eid in xg.link_edge:
        page_of[xg.graph.edges[eid]] = 0
    claimed = complete_pagenumber(t.max_degree)
    return _finish(xg, BookEmbedding(tuple(spine), page_of), claimed, "tree")


def embed_expansion_star(m: int) -> ExpansionEmbedding:
    """E_c(S_{m+1}): the K_m core with each pendant right after its slot."""
    if m < 2:
        raise GraphError("embed_expansion_star needs m >= 2")
    out = embed_expansion_tree(star_graph(m))
    return ExpansionEmbedding(out.expansion, out.emb, complete_pagenumber(m), "star")


# -------------------------------------------------------------------
#   Mobius ladders
# -------------------------------------------------------------------


def embed_expansion_mobius(h: int) -> ExpansionEmbedding:
    """E_c(M_h) in three pages.

    With ``a_i = v_{i-1}`` and ``b_i = v_{h+i-1}`` the spine is the blocks
    ``a_1..a_h`` then ``b_h..b_1``. An a-block lists its slots as
    (previous rim vertex, rung, next rim vertex); a b-block as (next, rung,
    previous), so every rim link except the two twists is spine-consecutive.
    Page 1 holds the twist ``a_1 b_h``; page 2 the twist ``a_h b_1`` and the
    outer chord of every triangle; page 3 the rungs.
    """
    if h < 3:
        raise GraphError("embed_expansion_mobius needs h >= 3")
    g = mobius_ladder(h)
    xg = complete_expansion(g)
    n = 2 * h

    def slot(v: int, w: int) -> int:
        return xg.vertex(v, g.edge_id(v, w))

    spine: list[int] = []
    blocks = list(range(h)) + list(range(n - 1, h - 1, -1))
    page_of: dict[Edge, int] = {}
    for v in blocks:
        prev, nxt, rung = (v - 1) % n, (v + 1) % n, (v + h) % n
        if v < h:
            order = [slot(v, prev), slot(v, rung), slot(v, nxt)]
        else:
            order = [slot(v, nxt), slot(v, rung), slot(v, prev)]
        spine += order
        page_of[_key(order[0], order[2])] = 2
    for eid, (u, v) in enumerate(g.edges):
        link = xg.graph.edges[xg.link_edge[eid]]
        if (u, v) == (0, n - 1):
            page_of[link] = 1
        elif (u, v) == (h - 1, h):
            page_of[link] = 2
        elif v - u == h:
            page_of[link] = 3
    for e in xg.graph.edges:
        page_of.setdefault(e, 0)
    return _finish(xg, BookEmbedding(tuple(spine), page_of), 3, "mobius")


# -------------------------------------------------------------------
#   Petersen graph
# -------------------------------------------------------------------

# Spine and page partition of E_c(P) for the canonical Petersen labelling and
# canonical expansion numbering. Found once by expanding a 3-page Petersen
# embedding and giving each triangle's outer chord a page other than that of
# its middle slot's link.
PETERSEN_SPINE: tuple[int, ...] = (
    2, 1, 0, 3, 5, 4, 6, 8, 7, 9, 11, 10, 13, 14, 12,
    15, 16, 17, 18, 19, 20, 28, 29, 27, 24, 26, 25, 23, 21, 22,
)
PETERSEN_PAGES: dict[int, tuple[Edge, ...]] = {
    1: ((0, 2), (5, 18), (6, 7), (9, 10), (12, 13), (15, 17), (18, 20), (22, 23), (23, 29), (24, 25)),
    2: ((3, 4), (8, 21), (11, 24), (14, 27), (27, 28)),
    3: ((1, 12), (2, 15), (16, 22), (17, 25), (19, 26)),
}


def embed_expansion_petersen() -> ExpansionEmbedding:
    xg = complete_expansion(petersen_graph())
    page_of = {e: p for p, edges in PETERSEN_PAGES.items() for e in edges}
    for e in xg.graph.edges:
        page_of.setdefault(e, 0)
    return _finish(xg, BookEmbedding(PETERSEN_SPINE, page_of), 3, "petersen")


# -------------------------------------------------------------------
#   Complete graphs K_n
# -------------------------------------------------------------------


def _even_complete_layout(n: int) -> tuple[ExpansionGraph, BookEmbedding]:
    """E_c(K_n), n even, in n/2 pages.

    Blocks ``0..n-1`` in order; block ``i`` lists its slots by target
    ``i-1, i-2, ..., i+1`` (mod n). A link ``i j`` takes the zigzag page of
    the chord ``{i, j}``. Under that slot order a block's two links on page
    ``k`` are adjacent, at positions ``(2q, 2q+1)`` for one ``q``; the block's
    internal chords ``(x, y)`` with ``ceil((x + y) / 2) = q (mod n/2)`` avoid
    straddling those two slots and join the same page.
    """
    m = n // 2
    g = complete_graph(n)
    xg = complete_expansion(g)
    spine: list[int] = []
    page_of: dict[Edge, int] = {}
    for i in range(n):
        block = [xg.vertex(i, g.edge_id(i, (i + d) % n)) for d in range(n - 1, 0, -1)]
        spine += block
        link_page = [zigzag_page(i, (i + d) % n, n) for d in range(n - 1, 0, -1)]
        for x, y in combinations(range(n - 1), 2):
            q = -(-(x + y) // 2) % m
            page_of[_key(block[x], block[y])] = link_page[2 * q]
    for eid, (u, v) in enumerate(g.edges):
        page_of[xg.graph.edges[xg.link_edge[eid]]] = zigzag_page(u, v, n)
    return xg, BookEmbedding(tuple(spine), page_of)


def embed_expansion_complete(n: int) -> ExpansionEmbedding:
    """E_c(K_n): n/2 pages for even n, (n+1)/2 for odd n.

    Odd n restricts the even layout of E_c(K_{n+1}): deleting the clique of
    the extra vertex and, in every other clique, the slot linking to it
    leaves exactly E_c(K_n).
    """
    if n < 3:
        raise GraphError("embed_expansion_complete needs n >= 3")
    if n % 2 == 0:
        xg, emb = _even_complete_layout(n)
        return _finish(xg, emb, n // 2, "expansion-complete")
    big_xg, big = _even_complete_layout(n + 1)
    g = complete_graph(n)
    xg = complete_expansion(g)
    big_g = big_xg.source
    to_big = [big_xg.vertex(v, big_g.edge_id(*g.edges[eid])) for v, eid in xg.vertex_origin]
    from_big = {b: a for a, b in enumerate(to_big)}
    spine = tuple(from_big[b] for b in big.spine if b in from_big)
    page_of = {e: big.page_of[_key(to_big[e[0]], to_big[e[1]])] for e in xg.graph.edges}
    return _finish(xg, BookEmbedding(spine, page_of), (n + 1) // 2, "expansion-complete")


# -------------------------------------------------------------------
#   General upper bound
# -------------------------------------------------------------------


def expand_embedding(g: Graph, emb_g: BookEmbedding) -> ExpansionEmbedding:
    """Turn a t-page embedding of ``g`` into one of E_c(g) with at most t + ceil(Delta/2) pages.

    Each spine vertex becomes a contiguous block of its clique's slots and
    each link keeps the page of its source edge. Inside a block the slots
    are grouped by page: the spine-page link to the left neighbour first,
    then per page the left-going links (nearest source first) followed by the
    right-going links (farthest target first), and the spine-page link to the
    right neighbour last. Same-page links then never cross, and the block
    cliques go on fresh pages after t.
    """
    problems = validate_embedding(g, emb_g)
    if problems:
        raise GraphError(f"source embedding is invalid: {problems[0]}")
    emb_g = emb_g.compact()
    t = emb_g.num_pages
    pos = emb_g.positions
    xg = complete_expansion(g)

    spine: list[int] = []
    page_of: dict[Edge, int] = {}
    for v in emb_g.spine:
        first, last, groups = [], [], {}
        for w in g.adjacency[v]:
            p = emb_g.page_of[_key(v, w)]
            s = xg.vertex(v, g.edge_id(v, w))
            if p == 0:
                (first if pos[w] < pos[v] else last).append(s)
            else:
                left = pos[w] < pos[v]
                groups.setdefault(p, []).append((not left, -pos[w], s))
        block = first[:]
        for p in sorted(groups):
            block += [s for *_, s in sorted(groups[p])]
        block += last
        spine += block
        for (i, j), p in clique_pages(len(block)).items():
            page_of[_key(block[i], block[j])] = t + p
    for eid, e in enumerate(g.edges):
        page_of[xg.graph.edges[xg.link_edge[eid]]] = emb_g.page_of[e]

    emb = BookEmbedding(tuple(spine), page_of).with_spine_edges_lowered()
    # renumber only the clique pages so link pages keep their source classes
    extra = sorted({p for p in emb.page_of.values() if p > t})
    remap = {p: t + i for i, p in enumerate(extra, start=1)}
    emb = BookEmbedding(emb.spine, {e: remap.get(p, p) for e, p in emb.page_of.items()})
    claimed = t + ceil_half(g.max_degree)
    emb = _checked(xg.graph, emb, "thm32")
    if emb.num_pages > claimed:
        raise ConstructionError(f"thm32: {emb.num_pages} pages exceed {claimed}")
    return ExpansionEmbedding(xg, emb, claimed, "thm32")


# -------------------------------------------------------------------
#   Lower bound
# -------------------------------------------------------------------


def expansion_lower_bound(g: Graph) -> tuple[int, str]:
    """Certified lower bound on pn(E_c(g)) and the argument giving it.

    Reasons: ``path`` (E_c(g) is a path, bound 0), ``clique`` (the largest
    clique K_Delta), ``nonplanar`` (3), ``nonouterplanar`` (2), ``nonpath`` (1).
    """
    if not is_connected(g):
        raise GraphError("expansion_lower_bound needs a connected graph")
    x = complete_expansion(g).graph
    if is_path(x):
        return 0, "path"
    candidates = [(complete_pagenumber(g.max_degree), "clique")]
    if not is_planar(x):
        candidates.append((3, "nonplanar"))
    elif not is_outerplanar(x):
        candidates.append((2, "nonouterplanar"))
    candidates.append((1, "nonpath"))
    best = max(b for b, _ in candidates)
    return next(c for c in candidates if c[0] == best)


def construct_for_source(g: Graph) -> ExpansionEmbedding | None:
    """Best available construction for E_c(g), chosen by recognising ``g``.

    Complete graphs, trees, and the canonical Mobius ladder and Petersen
    labellings get their dedicated layouts; any other connected graph goes
    through :func:`expand_embedding` on a first-fit embedding of ``g``.
    """
    from .solver import heuristic_upper_bound

    if not is_connected(g) or g.m == 0:
        return None
    if g.n >= 3 and is_complete(g):
        return embed_expansion_complete(g.n)
    if is_tree(g):
        return embed_expansion_tree(g)
    if g.n % 2 == 0 and g.n >= 6 and g == mobius_ladder(g.n // 2):
        return embed_expansion_mobius(g.n // 2)
    if g == petersen_graph():
        return embed_expansion_petersen()
    return expand_embedding(g, heuristic_upper_bound(g))

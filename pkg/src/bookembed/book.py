"""Book embeddings: the crossing predicate, validation, and fixed-spine paging.

Page 0 is the spine itself: it may only hold edges whose endpoints sit in
consecutive spine positions, and it is not counted. Every reported page
count is the number of distinct pages >= 1 in use.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Sequence

from .graphs import Edge, Graph, make_graph


def _key(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class BookEmbedding:
    """Spine order plus a page for every edge (keyed by the sorted pair)."""

    spine: tuple[int, ...]
    page_of: Mapping[Edge, int] = field(hash=False)

    @property
    def positions(self) -> dict[int, int]:
        return {v: i for i, v in enumerate(self.spine)}

    @property
    def used_pages(self) -> list[int]:
        return sorted({p for p in self.page_of.values() if p >= 1})

    @property
    def num_pages(self) -> int:
        return len(self.used_pages)

    def pages(self) -> dict[int, list[Edge]]:
        out: dict[int, list[Edge]] = {}
        for e in sorted(self.page_of):
            out.setdefault(self.page_of[e], []).append(e)
        return dict(sorted(out.items()))

    def compact(self) -> BookEmbedding:
        """Renumber the used pages >= 1 to 1..k, keeping their relative order."""
        remap = {p: i for i, p in enumerate(self.used_pages, start=1)}
        remap[0] = 0
        return BookEmbedding(self.spine, {e: remap[p] for e, p in self.page_of.items()})

    def with_spine_edges_lowered(self) -> BookEmbedding:
        """Move every spine-consecutive edge to page 0."""
        pos = self.positions
        return BookEmbedding(
            self.spine,
            {e: 0 if abs(pos[e[0]] - pos[e[1]]) == 1 else p for e, p in self.page_of.items()},
        )

    def relabel(self, mapping: Sequence[int]) -> BookEmbedding:
        """Embedding of the graph whose vertex ``v`` is renamed ``mapping[v]``."""
        return BookEmbedding(
            tuple(mapping[v] for v in self.spine),
            {_key(mapping[u], mapping[v]): p for (u, v), p in self.page_of.items()},
        )


@dataclass(frozen=True, order=True)
class Crossing:
    e1: int
    e2: int
    page: int


@dataclass(frozen=True)
class StructuralViolation:
    message: str


def edges_cross(pos: Mapping[int, int], e1: Sequence[int], e2: Sequence[int]) -> bool:
    """True iff the endpoints of ``e1`` and ``e2`` alternate along the spine.

    Edges sharing an endpoint never cross.
    """
    a, b = sorted((pos[e1[0]], pos[e1[1]]))
    c, d = pos[e2[0]], pos[e2[1]]
    if len({a, b, c, d}) < 4:
        return False
    return (a < c < b) != (a < d < b)


def _spans(g: Graph, pos: Mapping[int, int]) -> list[tuple[int, int]]:
    out = []
    for u, v in g.edges:
        a, b = pos[u], pos[v]
        out.append((a, b) if a < b else (b, a))
    return out


def crossing_pairs(g: Graph, spine: Sequence[int]) -> list[tuple[int, int]]:
    """All EdgeId pairs ``(i, j)``, ``i < j``, whose endpoints alternate on ``spine``."""
    pos = {v: i for i, v in enumerate(spine)}
    spans = _spans(g, pos)
    order = sorted(range(g.m), key=lambda i: spans[i])
    out = []
    for x, i in enumerate(order):
        a, b = spans[i]
        for j in order[x + 1:]:
            c, d = spans[j]
            if c >= b:
                break
            if a < c < b < d:
                out.append((i, j) if i < j else (j, i))
    out.sort()
    return out


def validate_embedding(g: Graph, emb: BookEmbedding) -> list[Crossing | StructuralViolation]:
    """Every problem with ``emb`` as a book embedding of ``g``; empty means legal."""
    problems: list[Crossing | StructuralViolation] = []
    if sorted(emb.spine) != list(range(g.n)):
        problems.append(StructuralViolation(f"spine is not a permutation of 0..{g.n - 1}"))
        return problems
    expected = set(g.edges)
    given = set(emb.page_of)
    for e in sorted(expected - given):
        problems.append(StructuralViolation(f"edge {e[0]}-{e[1]} has no page"))
    for e in sorted(given - expected):
        problems.append(StructuralViolation(f"edge {e[0]}-{e[1]} is not in the graph"))
    pos = emb.positions
    for e in g.edges:
        p = emb.page_of.get(e)
        if p is None:
            continue
        if not isinstance(p, int) or p < 0:
            problems.append(StructuralViolation(f"edge {e[0]}-{e[1]} has invalid page {p!r}"))
        elif p == 0 and abs(pos[e[0]] - pos[e[1]]) != 1:
            problems.append(
                StructuralViolation(f"edge {e[0]}-{e[1]} on the spine page but not spine-consecutive")
            )
    for i, j in crossing_pairs(g, emb.spine):
        pi = emb.page_of.get(g.edges[i])
        if pi is not None and pi >= 1 and pi == emb.page_of.get(g.edges[j]):
            problems.append(Crossing(i, j, pi))
    return problems


def is_valid(g: Graph, emb: BookEmbedding) -> bool:
    return not validate_embedding(g, emb)


@dataclass(frozen=True)
class ConflictGraph:
    """Graph on the EdgeIds of ``subject``: adjacent iff they cross on ``spine``."""

    graph: Graph
    subject: Graph
    spine: tuple[int, ...]


def conflict_graph(g: Graph, spine: Sequence[int]) -> ConflictGraph:
    return ConflictGraph(make_graph(g.m, crossing_pairs(g, spine)), g, tuple(spine))


def _consecutive(g: Graph, spine: Sequence[int]) -> list[bool]:
    pos = {v: i for i, v in enumerate(spine)}
    return [abs(pos[u] - pos[v]) == 1 for u, v in g.edges]


def first_fit_pages(g: Graph, spine: Sequence[int]) -> BookEmbedding:
    """Greedy paging for a fixed spine.

    Spine-consecutive edges go to page 0. The rest are scanned by left end
    ascending, right end descending, each taking the lowest page >= 1 that
    holds nothing it crosses.
    """
    pos = {v: i for i, v in enumerate(spine)}
    spans = _spans(g, pos)
    consecutive = _consecutive(g, spine)
    crosses: list[set[int]] = [set() for _ in range(g.m)]
    for i, j in crossing_pairs(g, spine):
        crosses[i].add(j)
        crosses[j].add(i)
    page_of: dict[Edge, int] = {}
    members: list[set[int]] = []
    for i in sorted(range(g.m), key=lambda i: (spans[i][0], -spans[i][1])):
        if consecutive[i]:
            page_of[g.edges[i]] = 0
            continue
        for p, on_page in enumerate(members, start=1):
            if not crosses[i] & on_page:
                on_page.add(i)
                page_of[g.edges[i]] = p
                break
        else:
            members.append({i})
            page_of[g.edges[i]] = len(members)
    return BookEmbedding(tuple(spine), page_of)


# -------------------------------------------------------------------
#   Exact colouring of conflict graphs
# -------------------------------------------------------------------


class SearchLimit(Exception):
    """Raised inside a search when its node budget runs out."""


def k_coloring(
    adj: Sequence[Sequence[int]],
    k: int,
    nodes: Sequence[int] | None = None,
    counter: list[int] | None = None,
    limit: int | None = None,
) -> list[int] | None:
    """A proper colouring of ``nodes`` with colours ``0..k-1``, or None.

    Branch and bound over nodes in largest-degree-first order (ties by
    index); a node may open at most one colour beyond those already used.
    ``counter[0]`` is incremented per search node and :class:`SearchLimit`
    is raised once it exceeds ``limit``. Uncoloured nodes get -1.
    """
    if nodes is None:
        nodes = range(len(adj))
    order = sorted(nodes, key=lambda v: (-len(adj[v]), v))
    colour = [-1] * len(adj)
    if not order:
        return colour
    if k <= 0:
        return None
    counter = counter if counter is not None else [0]

    def place(idx: int, opened: int) -> bool:
        if idx == len(order):
            return True
        counter[0] += 1
        if limit is not None and counter[0] > limit:
            raise SearchLimit
        v = order[idx]
        taken = {colour[w] for w in adj[v]}
        for c in range(min(opened + 1, k)):
            if c in taken:
                continue
            colour[v] = c
            if place(idx + 1, max(opened, c + 1)):
                return True
        colour[v] = -1
        return False

    return colour if place(0, 0) else None


def _greedy_clique(adj: Sequence[Sequence[int]], nodes: Sequence[int]) -> int:
    best = 0
    nodeset = set(nodes)
    for s in nodes:
        clique = [s]
        cand = set(adj[s]) & nodeset
        while cand:
            v = max(cand, key=lambda w: (len(set(adj[w]) & cand), -w))
            clique.append(v)
            cand &= set(adj[v])
        best = max(best, len(clique))
    return best


def min_pages_fixed_spine(
    g: Graph, spine: Sequence[int], page_budget: int
) -> tuple[int, BookEmbedding] | None:
    """Fewest pages for ``g`` on ``spine``, if at most ``page_budget``.

    Returns ``(k, embedding)`` with a minimal ``k``, or None when more than
    ``page_budget`` pages are needed.
    """
    result = _min_colouring(g, spine, page_budget)
    if result is None:
        return None
    k, colour = result
    return k, _embedding_from_colours(g, spine, colour)


def _min_colouring(g, spine, page_budget, counter=None, limit=None):
    consecutive = _consecutive(g, spine)
    active = [i for i in range(g.m) if not consecutive[i]]
    if not active:
        return 0, [-1] * g.m
    adj: list[list[int]] = [[] for _ in range(g.m)]
    for i, j in crossing_pairs(g, spine):
        adj[i].append(j)
        adj[j].append(i)
    low = max(1, _greedy_clique(adj, active))
    for k in range(low, page_budget + 1):
        colour = k_coloring(adj, k, active, counter, limit)
        if colour is not None:
            return k, colour
    return None


def _embedding_from_colours(g: Graph, spine, colour) -> BookEmbedding:
    return BookEmbedding(tuple(spine), {e: colour[i] + 1 for i, e in enumerate(g.edges)})

"""Simple undirected graphs, the named families, and structural predicates.

Vertices are dense integers ``0..n-1``. Edges are stored as sorted pairs
``(u, v)`` with ``u < v`` in a sorted tuple; the position of an edge in that
tuple is its EdgeId.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

import networkx as nx

Edge = tuple[int, int]


class GraphError(ValueError):
    """Raised for inputs that do not describe a simple undirected graph."""


@dataclass(frozen=True)
class Graph:
    n: int
    edges: tuple[Edge, ...]
    adjacency: tuple[tuple[int, ...], ...]

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(a) for a in self.adjacency)

    @property
    def max_degree(self) -> int:
        return max(self.degrees, default=0)

    @cached_property
    def edge_index(self) -> dict[Edge, int]:
        return {e: i for i, e in enumerate(self.edges)}

    def edge_id(self, u: int, v: int) -> int:
        """EdgeId of the edge ``{u, v}``; ``KeyError`` if absent."""
        return self.edge_index[(u, v) if u < v else (v, u)]

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self.edge_index

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self.edges)
        return g

    def relabel(self, mapping: Sequence[int]) -> Graph:
        """Graph with vertex ``v`` renamed to ``mapping[v]``."""
        return make_graph(self.n, [(mapping[u], mapping[v]) for u, v in self.edges])

    def induced(self, vertices: Iterable[int]) -> tuple[Graph, list[int]]:
        """Induced subgraph, relabelled densely; returns it with the old labels."""
        keep = sorted(set(vertices))
        new = {v: i for i, v in enumerate(keep)}
        sub = [(new[u], new[v]) for u, v in self.edges if u in new and v in new]
        return make_graph(len(keep), sub), keep


def make_graph(n: int, edge_list: Iterable[Sequence[int]]) -> Graph:
    """Build a simple graph on ``n`` vertices.

    Pairs are normalised to ``u < v``; duplicate pairs (in either orientation)
    collapse silently. Self-loops and out-of-range endpoints raise
    :class:`GraphError`.
    """
    if n < 0:
        raise GraphError(f"vertex count must be non-negative, got {n}")
    seen: set[Edge] = set()
    for pair in edge_list:
        u, v = (int(x) for x in pair)
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        seen.add((u, v) if u < v else (v, u))
    edges = tuple(sorted(seen))
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    return Graph(n, edges, tuple(tuple(sorted(a)) for a in adj))


# -------------------------------------------------------------------
#   Families
# -------------------------------------------------------------------


def path_graph(n: int) -> Graph:
    if n < 2:
        raise GraphError("path needs n >= 2")
    return make_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle needs n >= 3")
    return make_graph(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(m: int) -> Graph:
    """S_{m+1}: centre 0 joined to leaves 1..m."""
    if m < 1:
        raise GraphError("star needs m >= 1")
    return make_graph(m + 1, [(0, i) for i in range(1, m + 1)])


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise GraphError("complete graph needs n >= 1")
    return make_graph(n, combinations(range(n), 2))


def complete_bipartite_graph(a: int, b: int) -> Graph:
    if a < 1 or b < 1:
        raise GraphError("complete bipartite graph needs both sides >= 1")
    return make_graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def mobius_ladder(h: int) -> Graph:
    """Cycle ``v_0..v_{2h-1}`` plus the rungs ``(v_i, v_{i+h})``."""
    if h < 3:
        raise GraphError("Mobius ladder needs h >= 3")
    n = 2 * h
    rim = [(i, (i + 1) % n) for i in range(n)]
    rungs = [(i, i + h) for i in range(h)]
    return make_graph(n, rim + rungs)


def petersen_graph() -> Graph:
    """Outer 5-cycle 0..4, inner pentagram 5..9, spokes (i, i+5)."""
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    return make_graph(10, outer + inner + spokes)


def tree_from_parents(parents: Sequence[int]) -> Graph:
    """Tree on ``len(parents) + 1`` vertices; vertex ``i + 1`` hangs off ``parents[i]``."""
    for i, p in enumerate(parents, start=1):
        if not 0 <= p < i:
            raise GraphError(f"parent of vertex {i} must lie in [0, {i}), got {p}")
    return make_graph(len(parents) + 1, [(p, i) for i, p in enumerate(parents, start=1)])


FAMILIES = {
    "path": path_graph,
    "cycle": cycle_graph,
    "star": star_graph,
    "complete": complete_graph,
    "complete_bipartite": complete_bipartite_graph,
    "mobius_ladder": mobius_ladder,
    "petersen": petersen_graph,
    "tree_from_parents": tree_from_parents,
}


def family_graph(kind: str, *params) -> Graph:
    try:
        ctor = FAMILIES[kind]
    except KeyError:
        raise GraphError(f"unknown family {kind!r}") from None
    return ctor(*params)


# -------------------------------------------------------------------
#   Predicates
# -------------------------------------------------------------------


def components(g: Graph) -> list[list[int]]:
    seen = [False] * g.n
    out = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.adjacency[u]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        out.append(comp)
    return out


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(components(g)) == 1


def is_tree(g: Graph) -> bool:
    return g.n >= 1 and g.m == g.n - 1 and is_connected(g)


def is_path(g: Graph) -> bool:
    """Connected, and every vertex has degree at most 2 with exactly two ends."""
    if g.n == 1:
        return True
    return is_tree(g) and g.max_degree <= 2


def is_cycle(g: Graph) -> bool:
    return g.n >= 3 and is_connected(g) and all(d == 2 for d in g.degrees)


def is_complete(g: Graph) -> bool:
    return g.m == g.n * (g.n - 1) // 2


def is_linear_forest(g: Graph) -> bool:
    """Disjoint union of paths (no cycles, degrees at most 2)."""
    if g.max_degree > 2:
        return False
    return all(
        len(c) == 1 or sum(g.degree(v) for v in c) == 2 * (len(c) - 1)
        for c in components(g)
    )


def is_planar(g: Graph) -> bool:
    """Exact planarity decision (left-right test from networkx)."""
    if g.n >= 3 and g.m > 3 * g.n - 6:
        return False
    planar, _ = nx.check_planarity(g.to_networkx())
    return bool(planar)


def is_outerplanar(g: Graph) -> bool:
    """Planarity of ``g`` plus an apex vertex adjacent to every vertex."""
    apex = g.n
    plus = make_graph(g.n + 1, list(g.edges) + [(v, apex) for v in range(g.n)])
    return is_planar(plus)


def complete_pagenumber(d: int) -> int:
    """Pagenumber of K_d with spine edges free: 0 for d <= 2, 1 for d = 3, else ceil(d/2)."""
    if d <= 2:
        return 0
    if d == 3:
        return 1
    return (d + 1) // 2

"""Shared helpers for the test suite: seeded generators, an independent
brute-force pagenumber oracle, and an in-process CLI runner."""

from __future__ import annotations

import contextlib
import io
import itertools
import random
from functools import lru_cache

import numpy as np

from bookembed.cli import main as cli_main
from bookembed.graphs import Graph, make_graph, tree_from_parents


def random_tree(rng: random.Random, n: int) -> Graph:
    return tree_from_parents([rng.randrange(i) for i in range(1, n)])


def random_connected_graph(rng: random.Random, n: int, p: float) -> Graph:
    """Random spanning tree plus every other pair independently with probability p."""
    order = list(range(n))
    rng.shuffle(order)
    edges = {tuple(sorted((order[i], order[rng.randrange(i)]))) for i in range(1, n)}
    for u, v in itertools.combinations(range(n), 2):
        if rng.random() < p:
            edges.add((u, v))
    return make_graph(n, sorted(edges))


def random_spanning_subgraph(rng: random.Random, g: Graph) -> Graph:
    """Connected labelled subgraph of g on the same vertices."""
    edges = list(g.edges)
    rng.shuffle(edges)
    parent = list(range(g.n))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    keep = []
    for u, v in edges:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
            keep.append((u, v))
        elif rng.random() < 0.4:
            keep.append((u, v))
    return make_graph(g.n, keep)


# -------------------------------------------------------------------
#   brute-force oracle
# -------------------------------------------------------------------


@lru_cache(maxsize=None)
def _assignments(k: int, m: int) -> np.ndarray:
    """All k**m page assignments of m edges as rows."""
    if m == 0:
        return np.zeros((1, 0), dtype=np.int8)
    grids = np.indices((k,) * m, dtype=np.int8)
    return grids.reshape(m, -1).T


def brute_force_pagenumber(g: Graph, max_pages: int = 3) -> int | None:
    """Minimum pages over every spine order and every page assignment.

    Written from the definitions alone: spine-consecutive edges are free,
    two other edges may share a page unless their endpoints alternate.
    Returns None when more than ``max_pages`` pages are needed.
    """
    best = None
    for spine in itertools.permutations(range(g.n)):
        pos = {v: i for i, v in enumerate(spine)}
        spans = [tuple(sorted((pos[u], pos[v]))) for u, v in g.edges]
        spans = [s for s in spans if s[1] - s[0] > 1]
        pairs = [
            (i, j)
            for i, j in itertools.combinations(range(len(spans)), 2)
            if spans[i][0] < spans[j][0] < spans[i][1] < spans[j][1]
            or spans[j][0] < spans[i][0] < spans[j][1] < spans[i][1]
        ]
        if not spans:
            return 0
        limit = max_pages if best is None else best - 1
        for k in range(1, limit + 1):
            table = _assignments(k, len(spans))
            ok = np.ones(len(table), dtype=bool)
            for i, j in pairs:
                ok &= table[:, i] != table[:, j]
            if ok.any():
                best = k
                break
    return best


# -------------------------------------------------------------------
#   CLI
# -------------------------------------------------------------------


def run_cli(*args) -> tuple[int, str]:
    out, err = io.StringIO(), io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
        try:
            code = cli_main([str(a) for a in args])
        except SystemExit as exc:  # argparse usage errors
            code = exc.code
    return code, out.getvalue() + err.getvalue()


def summary(text: str) -> dict[str, str]:
    """Parse ``key: value`` summary lines."""
    pairs = {}
    for line in text.splitlines():
        key, sep, value = line.partition(": ")
        if sep:
            pairs[key.strip()] = value.strip()
    return pairs


# -------------------------------------------------------------------
#   expansion mutations, one per structural clause
# -------------------------------------------------------------------


def _with_edges(xg, edges):
    from dataclasses import replace

    return replace(xg, graph=make_graph(xg.graph.n, edges))


def mutate_merge_cliques(xg):
    """Clause (1): two clique vertex sets overlap."""
    from dataclasses import replace

    cliques = list(xg.clique_of)
    cliques[0] = tuple(sorted(set(cliques[0]) | set(cliques[1])))
    return replace(xg, clique_of=tuple(cliques))


def mutate_swap_links(xg):
    """Clause (2): two links trade endpoints, so two source edges lose their link.

    Cut sizes and per-vertex link counts are unchanged.
    """
    g = xg.source
    for e1, e2 in itertools.combinations(range(g.m), 2):
        (u, v), (w, z) = g.edges[e1], g.edges[e2]
        if len({u, v, w, z}) == 4 and not g.has_edge(u, w) and not g.has_edge(v, z):
            a, b = xg.vertex(u, e1), xg.vertex(v, e1)
            c, d = xg.vertex(w, e2), xg.vertex(z, e2)
            edges = set(xg.graph.edges) - {tuple(sorted((a, b))), tuple(sorted((c, d)))}
            edges |= {tuple(sorted((a, c))), tuple(sorted((b, d)))}
            return _with_edges(xg, sorted(edges))
    raise ValueError("no swappable link pair")


def mutate_drop_link(xg):
    """Clause (3): one link removed, so a clique boundary shrinks."""
    edges = list(xg.graph.edges)
    del edges[xg.link_edge[0]]
    return _with_edges(xg, edges)


def mutate_double_link(xg):
    """Clause (4): a link moves to a clique vertex that already carries one."""
    g = xg.source
    for v in range(g.n):
        block = xg.clique_of[v]
        if len(block) >= 2:
            a, b = block[0], block[1]
            other = next(x for x in xg.graph.adjacency[a] if xg.owner(x) != v)
            edges = set(xg.graph.edges) - {tuple(sorted((a, other)))}
            edges.add(tuple(sorted((b, other))))
            return _with_edges(xg, sorted(edges))
    raise ValueError("no clique with two vertices")


MUTATIONS = {
    "(1)": mutate_merge_cliques,
    "(2)": mutate_swap_links,
    "(3)": mutate_drop_link,
    "(4)": mutate_double_link,
}

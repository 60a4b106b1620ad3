"""Exact pagenumber certification for small graphs.

Spines are enumerated up to rotation and reflection: vertex 0 is pinned to
position 0 and a spine is skipped when its second vertex is larger than its
last (the reflected cyclic order). This is complete because crossing is a
cyclic property; the spine page only matters for paths, which are settled
before any search.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from enum import Enum

from .book import (
    BookEmbedding,
    SearchLimit,
    _embedding_from_colours,
    _min_colouring,
    first_fit_pages,
    k_coloring,
    validate_embedding,
)
from .graphs import (
    Graph,
    GraphError,
    complete_pagenumber,
    is_connected,
    is_linear_forest,
    is_outerplanar,
    is_path,
    is_planar,
)


@dataclass(frozen=True)
class SearchBudget:
    max_nodes: int = 2_000_000
    max_seconds: float = 60.0
    workers: int = 1

    def __post_init__(self):
        if self.max_nodes <= 0 or self.max_seconds <= 0 or self.workers <= 0:
            raise ValueError("search budget fields must be positive")


class Status(str, Enum):
    FEASIBLE = "feasible"
    INFEASIBLE = "infeasible"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class Decision:
    status: Status
    embedding: BookEmbedding | None = None
    nodes: int = 0


@dataclass(frozen=True)
class InfeasibilityProof:
    pages: int
    search: str  # "exhausted", "bound" or "budget_exceeded"
    nodes_explored: int = 0
    reason: str = ""


@dataclass(frozen=True)
class PageNumberCertificate:
    value: int
    witness: BookEmbedding
    infeasibility_proof: InfeasibilityProof | None
    bounds_used: tuple[int, int]
    exact: bool = field(default=True)

    @property
    def status(self) -> str:
        return "exact" if self.exact else "bounds"


class _Deadline:
    def __init__(self, budget: SearchBudget):
        self.limit = budget.max_nodes
        self.stop = time.monotonic() + budget.max_seconds
        self.count = [0]

    def tick(self):
        self.count[0] += 1
        if self.count[0] > self.limit or (
            self.count[0] % 256 == 0 and time.monotonic() > self.stop
        ):
            raise SearchLimit


def _candidate_order(g: Graph, last: int) -> list[int]:
    # neighbours of the last placed vertex first: good spines tend to walk
    # along edges, so feasible instances are found much sooner
    near = g.adjacency[last]
    return list(near) + [v for v in range(1, g.n) if v not in near]


class _SpineSearch:
    """Depth-first spine construction with incremental conflict pruning.

    After each placement, the crossings already determined (edges with both
    ends placed against each other, and against edges with one end placed)
    must admit a k-colouring; the previous colouring is reused when it still
    fits.
    """

    def __init__(self, g: Graph, k: int, deadline: _Deadline):
        self.g, self.k, self.deadline = g, k, deadline
        self.pos = [-1] * g.n
        self.spine: list[int] = []

    def _determined_conflicts(self):
        g, pos = self.g, self.pos
        placed_any = [i for i, (u, v) in enumerate(g.edges) if pos[u] >= 0 or pos[v] >= 0]
        span = {}
        for i in placed_any:
            u, v = g.edges[i]
            a, b = pos[u], pos[v]
            if a < 0 or b < 0:
                span[i] = (max(a, b), None)
            else:
                span[i] = (min(a, b), max(a, b))
        adj = [[] for _ in range(g.m)]
        full = [i for i in placed_any if span[i][1] is not None]
        half = [i for i in placed_any if span[i][1] is None]
        for x, i in enumerate(full):
            a, b = span[i]
            for j in full[x + 1:]:
                c, d = span[j]
                if (a < c < b < d) or (c < a < d < b):
                    adj[i].append(j)
                    adj[j].append(i)
            for j in half:
                c = span[j][0]
                if a < c < b:
                    adj[i].append(j)
                    adj[j].append(i)
        return placed_any, adj

    def _colourable(self, colour_hint):
        nodes, adj = self._determined_conflicts()
        if colour_hint is not None:
            colour = list(colour_hint)
            for i in nodes:
                if colour[i] < 0:
                    taken = {colour[j] for j in adj[i]}
                    colour[i] = next((c for c in range(self.k) if c not in taken), -1)
            if all(
                colour[i] >= 0 and all(colour[i] != colour[j] for j in adj[i]) for i in nodes
            ):
                return colour
        return k_coloring(adj, self.k, nodes, self.deadline.count, self.deadline.limit)

    def run(self, first_choices=None) -> BookEmbedding | None:
        self.pos[0] = 0
        self.spine = [0]
        colour = self._colourable(None)
        if colour is None:
            return None
        return self._extend(colour, first_choices)

    def _extend(self, colour, first_choices=None):
        g, n = self.g, self.g.n
        depth = len(self.spine)
        if depth == n:
            result = _min_colouring(g, self.spine, self.k, self.deadline.count, self.deadline.limit)
            if result is None:
                return None
            return _embedding_from_colours(g, self.spine, result[1])
        if depth == 1 and first_choices is not None:
            candidates = first_choices
        else:
            candidates = _candidate_order(g, self.spine[-1])
        for v in candidates:
            if self.pos[v] >= 0:
                continue
            # reflection: second vertex must not exceed the last one
            if depth == n - 1 and n > 2 and self.spine[1] > v:
                continue
            self.deadline.tick()
            self.pos[v] = depth
            self.spine.append(v)
            nxt = self._colourable(colour)
            if nxt is not None:
                found = self._extend(list(nxt))
                if found is not None:
                    return found
            self.spine.pop()
            self.pos[v] = -1
        return None


def _decide_branch(args):
    g, k, budget, first = args
    deadline = _Deadline(budget)
    try:
        emb = _SpineSearch(g, k, deadline).run([first])
    except SearchLimit:
        return Status.UNKNOWN, None, deadline.count[0]
    return (Status.FEASIBLE if emb else Status.INFEASIBLE), emb, deadline.count[0]


def decide_pages(g: Graph, k: int, budget: SearchBudget | None = None) -> Decision:
    """Whether ``g`` has a book embedding in at most ``k`` pages.

    Three-valued: a feasible answer carries a validated witness, an
    infeasible answer means the spine space was exhausted, and unknown means
    the budget ran out first.
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    budget = budget or SearchBudget()
    if is_linear_forest(g):
        spine = _linear_forest_spine(g)
        return Decision(Status.FEASIBLE, first_fit_pages(g, spine), 0)
    if k == 0:
        return Decision(Status.INFEASIBLE, None, 0)
    if g.n <= 2:
        return Decision(Status.FEASIBLE, first_fit_pages(g, list(range(g.n))), 0)

    if budget.workers > 1:
        return _decide_parallel(g, k, budget)
    deadline = _Deadline(budget)
    try:
        emb = _SpineSearch(g, k, deadline).run()
    except SearchLimit:
        return Decision(Status.UNKNOWN, None, deadline.count[0])
    if emb is None:
        return Decision(Status.INFEASIBLE, None, deadline.count[0])
    _assert_valid(g, emb)
    return Decision(Status.FEASIBLE, emb, deadline.count[0])


def _decide_parallel(g: Graph, k: int, budget: SearchBudget) -> Decision:
    # one task per choice of the position-1 vertex; the lowest feasible
    # branch wins, which is exactly the branch the sequential search takes
    tasks = [(g, k, budget, v) for v in _candidate_order(g, 0)]
    with ProcessPoolExecutor(max_workers=budget.workers) as pool:
        outcomes = list(pool.map(_decide_branch, tasks))
    nodes = sum(c for _, _, c in outcomes)
    for status, emb, _ in outcomes:
        if status is Status.FEASIBLE:
            _assert_valid(g, emb)
            return Decision(Status.FEASIBLE, emb, nodes)
        if status is Status.UNKNOWN:
            return Decision(Status.UNKNOWN, None, nodes)
    return Decision(Status.INFEASIBLE, None, nodes)


def _assert_valid(g: Graph, emb: BookEmbedding) -> None:
    problems = validate_embedding(g, emb)
    if problems:
        raise RuntimeError(f"solver produced an invalid witness: {problems[0]}")


def _linear_forest_spine(g: Graph) -> list[int]:
    seen = [False] * g.n
    spine = []
    for s in range(g.n):
        if seen[s] or g.degree(s) == 2:
            continue
        cur, prev = s, -1
        while True:
            seen[cur] = True
            spine.append(cur)
            nxt = [w for w in g.adjacency[cur] if w != prev]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
    return spine


# -------------------------------------------------------------------
#   Bounds
# -------------------------------------------------------------------


def _largest_clique(g: Graph) -> int:
    import networkx as nx

    if g.m == 0:
        return 1 if g.n else 0
    return max(len(c) for c in nx.find_cliques(g.to_networkx()))


def structural_lower_bound(g: Graph) -> tuple[int, str]:
    """Cheap certified lower bound and the argument behind it."""
    if is_linear_forest(g):
        return 0, "path"
    candidates = [(complete_pagenumber(_largest_clique(g)), "clique")]
    if not is_planar(g):
        candidates.append((3, "nonplanar"))
    elif not is_outerplanar(g):
        candidates.append((2, "nonouterplanar"))
    candidates.append((1, "nonpath"))
    best = max(b for b, _ in candidates)
    return next(c for c in candidates if c[0] == best)


def candidate_spines(g: Graph) -> list[list[int]]:
    """Natural order, DFS preorder from 0, and degree-descending order."""
    spines = [list(range(g.n))]
    seen, order, stack = set(), [], [0] if g.n else []
    while stack:
        v = stack.pop()
        if v in seen:
            continue
        seen.add(v)
        order.append(v)
        stack.extend(sorted(g.adjacency[v], reverse=True))
    order += [v for v in range(g.n) if v not in seen]
    spines.append(order)
    spines.append(sorted(range(g.n), key=lambda v: (-g.degree(v), v)))
    return spines


def heuristic_upper_bound(g: Graph) -> BookEmbedding:
    best = None
    for spine in candidate_spines(g):
        emb = first_fit_pages(g, spine)
        if best is None or emb.num_pages < best.num_pages:
            best = emb
    return best


def pagenumber_bounds(g: Graph, expansion=None) -> tuple[int, int, dict]:
    """Certified ``(lower, upper, witnesses)`` without exhaustive search.

    ``expansion`` (an ExpansionGraph whose ``graph`` is ``g``) enables the
    clique bound of its largest block and the matching construction as an
    upper bound. ``witnesses`` maps ``"lower"`` to the reason and
    ``"upper"`` to the best embedding found.
    """
    if not is_connected(g):
        raise GraphError("pagenumber_bounds needs a connected graph")
    lower, reason = structural_lower_bound(g)
    best = heuristic_upper_bound(g)
    if expansion is not None:
        from .constructions import construct_for_source

        if expansion.graph != g:
            raise GraphError("expansion provenance does not match the graph")
        d = expansion.source.max_degree
        if complete_pagenumber(d) > lower:
            lower, reason = complete_pagenumber(d), "clique"
        built = construct_for_source(expansion.source)
        if built is not None and built.expansion.graph == g and built.num_pages < best.num_pages:
            best = built.emb
    if is_path(g):
        lower, reason = 0, "path"
    return lower, max(lower, best.num_pages), {"lower": reason, "upper": best}


def pagenumber_exact(
    g: Graph, budget: SearchBudget | None = None, expansion=None
) -> PageNumberCertificate:
    """Certified pagenumber of a connected graph.

    Starts from the structural lower bound and the best known upper bound,
    then asks :func:`decide_pages` for each page count from the lower bound
    upward. The page count just below the answer is always searched so the
    certificate can record an exhaustive refutation; if that search runs out
    of budget and a structural bound already rules it out, the certificate
    cites the bound instead. A budget stop with no such bound gives a
    ``bounds`` certificate, never a false exact value.
    """
    if not is_connected(g):
        raise GraphError("pagenumber_exact needs a connected graph")
    budget = budget or SearchBudget()
    lower, upper, wit = pagenumber_bounds(g, expansion)
    best: BookEmbedding = wit["upper"]
    if lower == 0:
        emb = BookEmbedding(tuple(_linear_forest_spine(g)), {e: 0 for e in g.edges})
        return PageNumberCertificate(0, emb, None, (0, 0))

    value, refuted = upper, None
    for k in range(lower, upper):
        d = decide_pages(g, k, budget)
        if d.status is Status.FEASIBLE:
            best, value = d.embedding, k
            break
        if d.status is Status.UNKNOWN:
            proof = InfeasibilityProof(k, "budget_exceeded", d.nodes)
            return PageNumberCertificate(upper, best, proof, (k, upper), exact=False)
        refuted = d
    best = best.compact()

    target = value - 1
    d = refuted if refuted is not None else decide_pages(g, target, budget)
    if d.status is Status.INFEASIBLE:
        proof = InfeasibilityProof(target, "exhausted", d.nodes)
    elif d.status is Status.UNKNOWN and lower > target:
        proof = InfeasibilityProof(target, "bound", d.nodes, wit["lower"])
    elif d.status is Status.UNKNOWN:
        proof = InfeasibilityProof(target, "budget_exceeded", d.nodes)
        return PageNumberCertificate(value, best, proof, (lower, value), exact=False)
    else:  # pragma: no cover - would contradict the ascent above
        raise RuntimeError("feasible below the certified value")
    return PageNumberCertificate(value, best, proof, (lower, value))

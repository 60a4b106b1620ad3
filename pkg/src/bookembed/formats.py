"""Plain-text file formats.

``.edg``  ``n m`` then one ``u v`` line per edge; ``#`` starts a comment.
``.emb``  ``spine: p0 p1 ...`` then ``page K: u-v u-v ...`` lines.
``.exp``  ``source: n m``, one ``CLIQUE v: ...`` line per source vertex and
          one ``LINK e: x-y`` line per source edge.
``.cert`` ``pagenumber:``, ``status:``, ``bounds:`` and a proof line such as
          ``exhausted: 2 nodes: 314``, followed by the witness ``.emb`` body.

Writers emit a canonical form, so ``write(read(text)) == text`` for any text
a writer produced.
"""

from __future__ import annotations

from pathlib import Path

from .book import BookEmbedding
from .expansion import ExpansionGraph, complete_expansion
from .graphs import Graph, GraphError, make_graph
from .solver import InfeasibilityProof, PageNumberCertificate


class FormatError(ValueError):
    pass


def _lines(text: str) -> list[str]:
    out = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            out.append(line)
    return out


# -------------------------------------------------------------------
#   .edg
# -------------------------------------------------------------------


def format_edg(g: Graph) -> str:
    return f"{g.n} {g.m}\n" + "".join(f"{u} {v}\n" for u, v in g.edges)


def parse_edg(text: str) -> Graph:
    lines = _lines(text)
    if not lines:
        raise FormatError("empty graph file")
    try:
        n, m = (int(x) for x in lines[0].split())
        pairs = [tuple(int(x) for x in line.split()) for line in lines[1:]]
    except ValueError as exc:
        raise FormatError(f"malformed graph file: {exc}") from None
    if any(len(p) != 2 for p in pairs):
        raise FormatError("every edge line needs exactly two vertices")
    if len(pairs) != m:
        raise FormatError(f"header announces {m} edges, found {len(pairs)}")
    try:
        return make_graph(n, pairs)
    except GraphError as exc:
        raise FormatError(str(exc)) from None


# -------------------------------------------------------------------
#   .emb
# -------------------------------------------------------------------


def format_emb(emb: BookEmbedding) -> str:
    out = ["spine: " + " ".join(map(str, emb.spine))]
    for p, edges in emb.pages().items():
        out.append(f"page {p}: " + " ".join(f"{u}-{v}" for u, v in edges))
    return "\n".join(out) + "\n"


def parse_emb(text: str) -> BookEmbedding:
    spine = None
    page_of: dict[tuple[int, int], int] = {}
    try:
        for line in _lines(text):
            head, _, body = line.partition(":")
            words = body.split()
            if head == "spine":
                spine = tuple(int(x) for x in words)
            elif head.startswith("page"):
                p = int(head.split()[1])
                for w in words:
                    u, v = (int(x) for x in w.split("-"))
                    e = (u, v) if u < v else (v, u)
                    if e in page_of:
                        raise FormatError(f"edge {w} listed twice")
                    page_of[e] = p
            else:
                raise FormatError(f"unexpected line {line!r}")
    except (ValueError, IndexError) as exc:
        raise FormatError(f"malformed embedding file: {exc}") from None
    if spine is None:
        raise FormatError("embedding file has no spine line")
    return BookEmbedding(spine, page_of)


# -------------------------------------------------------------------
#   .exp
# -------------------------------------------------------------------


def format_exp(xg: ExpansionGraph) -> str:
    out = [f"source: {xg.source.n} {xg.source.m}"]
    for v, block in enumerate(xg.clique_of):
        out.append(f"CLIQUE {v}: " + " ".join(map(str, block)))
    for e, eid in enumerate(xg.link_edge):
        a, b = xg.graph.edges[eid]
        out.append(f"LINK {e}: {a}-{b}")
    return "\n".join(out) + "\n"


def parse_exp(text: str) -> ExpansionGraph:
    """Rebuild the expansion; the file must match the canonical numbering."""
    cliques: dict[int, list[int]] = {}
    links: dict[int, tuple[int, int]] = {}
    n = m = None
    try:
        for line in _lines(text):
            head, _, body = line.partition(":")
            if head == "source":
                n, m = (int(x) for x in body.split())
            elif head.startswith("CLIQUE"):
                cliques[int(head.split()[1])] = [int(x) for x in body.split()]
            elif head.startswith("LINK"):
                a, b = (int(x) for x in body.strip().split("-"))
                links[int(head.split()[1])] = (a, b)
            else:
                raise FormatError(f"unexpected line {line!r}")
    except (ValueError, IndexError) as exc:
        raise FormatError(f"malformed provenance file: {exc}") from None
    if n is None or sorted(cliques) != list(range(n)) or sorted(links) != list(range(m)):
        raise FormatError("provenance file is incomplete")
    owner = {x: v for v, block in cliques.items() for x in block}
    try:
        source = make_graph(n, [(owner[a], owner[b]) for a, b in links.values()])
    except (KeyError, GraphError) as exc:
        raise FormatError(f"inconsistent provenance: {exc}") from None
    xg = complete_expansion(source)
    same_cliques = [list(b) for b in xg.clique_of] == [cliques[v] for v in range(n)]
    same_links = [xg.graph.edges[i] for i in xg.link_edge] == [
        tuple(sorted(links[e])) for e in range(m)
    ]
    if source.m != m or not (same_cliques and same_links):
        raise FormatError("provenance does not match the canonical expansion of its source")
    return xg


# -------------------------------------------------------------------
#   .cert
# -------------------------------------------------------------------


def format_cert(cert: PageNumberCertificate) -> str:
    lo, hi = cert.bounds_used
    out = [f"pagenumber: {cert.value}", f"status: {cert.status}", f"bounds: {lo} {hi}"]
    proof = cert.infeasibility_proof
    if proof is not None:
        out.append(f"{proof.search}: {proof.pages} nodes: {proof.nodes_explored}")
        if proof.reason:
            out.append(f"reason: {proof.reason}")
    return "\n".join(out) + "\n" + format_emb(cert.witness)


def parse_cert(text: str) -> PageNumberCertificate:
    header: dict[str, str] = {}
    proof = None
    body = []
    for line in _lines(text):
        key, _, rest = line.partition(":")
        if key in ("pagenumber", "status", "bounds", "reason"):
            header[key] = rest.strip()
        elif key in ("exhausted", "bound", "budget_exceeded"):
            words = rest.split()
            if len(words) != 3 or words[1] != "nodes:":
                raise FormatError(f"malformed proof line {line!r}")
            proof = (key, int(words[0]), int(words[2]))
        else:
            body.append(line)
    try:
        value = int(header["pagenumber"])
        lo, hi = (int(x) for x in header["bounds"].split())
        exact = {"exact": True, "bounds": False}[header["status"]]
    except (KeyError, ValueError) as exc:
        raise FormatError(f"malformed certificate header: {exc}") from None
    ip = None
    if proof is not None:
        ip = InfeasibilityProof(proof[1], proof[0], proof[2], header.get("reason", ""))
    return PageNumberCertificate(value, parse_emb("\n".join(body)), ip, (lo, hi), exact)


# -------------------------------------------------------------------
#   file helpers
# -------------------------------------------------------------------


def read_edg(path) -> Graph:
    return parse_edg(Path(path).read_text())


def write_edg(path, g: Graph) -> None:
    Path(path).write_text(format_edg(g))


def read_emb(path) -> BookEmbedding:
    return parse_emb(Path(path).read_text())


def write_emb(path, emb: BookEmbedding) -> None:
    Path(path).write_text(format_emb(emb))


def read_exp(path) -> ExpansionGraph:
    return parse_exp(Path(path).read_text())


def write_exp(path, xg: ExpansionGraph) -> None:
    Path(path).write_text(format_exp(xg))


def read_cert(path) -> PageNumberCertificate:
    return parse_cert(Path(path).read_text())


def write_cert(path, cert: PageNumberCertificate) -> None:
    Path(path).write_text(format_cert(cert))

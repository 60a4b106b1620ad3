"""Command-line entry point: ``bookembed <command> ...``.

Every command prints ``key: value`` summary lines. Exit status is 0 on
success, 1 when a validation fails, and 2 for usage errors or unusable input.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import formats
from .book import Crossing, validate_embedding
from .constructions import (
    ConstructionError,
    construct_for_source,
    embed_complete,
    embed_expansion_complete,
    embed_expansion_mobius,
    embed_expansion_petersen,
    embed_expansion_tree,
    expand_embedding,
)
from .expansion import complete_expansion
from .graphs import (
    GraphError,
    complete_bipartite_graph,
    complete_graph,
    cycle_graph,
    is_complete,
    is_connected,
    is_planar,
    is_tree,
    mobius_ladder,
    path_graph,
    petersen_graph,
    star_graph,
    tree_from_parents,
)
from .render import RenderOptions, render_arc_diagram
from .solver import SearchBudget, pagenumber_bounds, pagenumber_exact

EXIT_OK, EXIT_INVALID, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _say(**pairs) -> None:
    for k, v in pairs.items():
        if isinstance(v, bool):
            v = str(v).lower()
        print(f"{k}: {v}")


def _read_graph(path):
    try:
        return formats.read_edg(path)
    except (OSError, formats.FormatError) as exc:
        raise UsageError(f"cannot read graph {path}: {exc}") from None


def _read_provenance(path, g=None):
    if path is None:
        return None
    try:
        xg = formats.read_exp(path)
    except (OSError, formats.FormatError) as exc:
        raise UsageError(f"cannot read provenance {path}: {exc}") from None
    if g is not None and xg.graph != g:
        raise UsageError("provenance does not describe this graph")
    return xg


def _write(path, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


# -------------------------------------------------------------------
#   commands
# -------------------------------------------------------------------


def cmd_gen(args) -> int:
    fam = args.family
    try:
        if fam == "path":
            g = path_graph(args.n)
        elif fam == "cycle":
            g = cycle_graph(args.n)
        elif fam == "star":
            g = star_graph(args.m)
        elif fam == "complete":
            g = complete_graph(args.n)
        elif fam == "bipartite":
            g = complete_bipartite_graph(args.a, args.b)
        elif fam == "mobius":
            g = mobius_ladder(args.h)
        elif fam == "petersen":
            g = petersen_graph()
        else:
            if not args.parents:
                raise UsageError("tree needs --parents")
            g = tree_from_parents([int(x) for x in args.parents.split(",")])
    except (TypeError, ValueError) as exc:
        raise UsageError(f"bad parameters for {fam}: {exc}") from None
    _write(args.out, formats.format_edg(g))
    if args.out not in (None, "-"):
        _say(n=g.n, m=g.m)
    return EXIT_OK


def cmd_expand(args) -> int:
    g = _read_graph(args.graph)
    xg = complete_expansion(g)
    _write(args.out, formats.format_edg(xg.graph))
    if args.provenance:
        formats.write_exp(args.provenance, xg)
    if args.out not in (None, "-"):
        _say(n=xg.graph.n, m=xg.graph.m)
    return EXIT_OK


def _is_star(g) -> bool:
    return is_tree(g) and g.n >= 3 and g.max_degree == g.n - 1


def _embed(args):
    method = args.method
    if method == "mobius" and args.graph is None:
        if args.h is None:
            raise UsageError("mobius needs a graph or --h")
        return embed_expansion_mobius(args.h), None
    if method == "petersen" and args.graph is None:
        return embed_expansion_petersen(), None
    if args.graph is None:
        raise UsageError(f"method {method} needs an input graph")
    g = _read_graph(args.graph)
    xg = _read_provenance(args.provenance, g)
    source = xg.source if xg is not None else g

    if method == "complete":
        if not is_complete(g) or g.n < 2:
            raise UsageError("method complete needs a complete graph")
        return None, embed_complete(g.n)
    if method == "expansion-complete":
        if not is_complete(source) or source.n < 3:
            raise UsageError("method expansion-complete needs K_n with n >= 3")
        return embed_expansion_complete(source.n), None
    if method == "star":
        if not _is_star(source):
            raise UsageError("method star needs a star")
        return embed_expansion_tree(source), None
    if method == "tree":
        if not is_tree(source):
            raise UsageError("method tree needs a tree")
        return embed_expansion_tree(source), None
    if method == "mobius":
        if source.n % 2 or source.n < 6 or source != mobius_ladder(source.n // 2):
            raise UsageError("method mobius needs the canonical Mobius ladder")
        return embed_expansion_mobius(source.n // 2), None
    if method == "petersen":
        if source != petersen_graph():
            raise UsageError("method petersen needs the canonical Petersen graph")
        return embed_expansion_petersen(), None
    if method == "thm32":
        if args.emb is None:
            raise UsageError("method thm32 needs --emb with an embedding of the input")
        try:
            emb_g = formats.read_emb(args.emb)
        except (OSError, formats.FormatError) as exc:
            raise UsageError(f"cannot read embedding: {exc}") from None
        try:
            return expand_embedding(source, emb_g), None
        except GraphError as exc:
            raise UsageError(str(exc)) from None
    # auto
    if not is_connected(source) or source.m == 0:
        raise UsageError("auto needs a connected graph with at least one edge")
    return construct_for_source(source), None


def cmd_embed(args) -> int:
    try:
        built, plain = _embed(args)
    except GraphError as exc:
        raise UsageError(str(exc)) from None
    except ConstructionError as exc:
        print(f"error: internal validation failure: {exc}", file=sys.stderr)
        return EXIT_INVALID
    if built is not None:
        emb, graph = built.emb, built.expansion.graph
        _say(method=built.theorem_tag, pages=emb.num_pages, claimed=built.claimed_pages)
        if args.graph_out:
            formats.write_edg(args.graph_out, graph)
        if args.provenance_out:
            formats.write_exp(args.provenance_out, built.expansion)
    else:
        emb = plain
        graph = complete_graph(len(emb.spine))
        _say(method="complete", pages=emb.num_pages)
    if args.out:
        formats.write_emb(args.out, emb)
    if args.svg:
        Path(args.svg).write_text(render_arc_diagram(graph, emb, RenderOptions(args.split_pages)))
    return EXIT_OK


def cmd_validate(args) -> int:
    g = _read_graph(args.graph)
    try:
        emb = formats.read_emb(args.emb)
    except (OSError, formats.FormatError) as exc:
        raise UsageError(f"cannot read embedding: {exc}") from None
    problems = validate_embedding(g, emb)
    if not problems:
        print(f"OK, pages: {emb.num_pages}")
        return EXIT_OK
    for item in problems:
        if isinstance(item, Crossing):
            (a, b), (c, d) = g.edges[item.e1], g.edges[item.e2]
            print(f"crossing: ({a},{b})x({c},{d}) page {item.page}")
        else:
            print(f"structural: {item.message}")
    _say(problems=len(problems))
    return EXIT_INVALID


def _budget(args) -> SearchBudget:
    try:
        return SearchBudget(args.max_nodes, args.max_seconds, args.workers)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def cmd_solve(args) -> int:
    g = _read_graph(args.graph)
    xg = _read_provenance(args.provenance, g)
    if not is_connected(g):
        raise UsageError("solve needs a connected graph")
    cert = pagenumber_exact(g, _budget(args), expansion=xg)
    if cert.exact:
        print(f"pagenumber: {cert.value} (exact)")
    else:
        lo, hi = cert.bounds_used
        print(f"bounds: [{lo},{hi}]")
    proof = cert.infeasibility_proof
    if proof is not None:
        _say(refuted=proof.pages, search=proof.search, nodes=proof.nodes_explored)
    if args.out:
        formats.write_cert(args.out, cert)
    if args.witness:
        formats.write_emb(args.witness, cert.witness)
    return EXIT_OK


def cmd_info(args) -> int:
    g = _read_graph(args.graph)
    xg = _read_provenance(args.provenance, g)
    connected = is_connected(g)
    _say(n=g.n, m=g.m, max_degree=g.max_degree, connected=connected, planar=is_planar(g))
    if xg is not None:
        _say(source_n=xg.source.n, source_m=xg.source.m, source_max_degree=xg.source.max_degree)
    if not connected:
        return EXIT_OK
    lower, upper, wit = pagenumber_bounds(g, xg)
    _say(lower=f"{lower} ({wit['lower']})", upper=upper)
    if lower == upper:
        _say(pagenumber=lower, status="exact")
    else:
        _say(status="bounds")
    return EXIT_OK


def cmd_render(args) -> int:
    g = _read_graph(args.graph)
    try:
        emb = formats.read_emb(args.emb)
    except (OSError, formats.FormatError) as exc:
        raise UsageError(f"cannot read embedding: {exc}") from None
    svg = render_arc_diagram(g, emb, RenderOptions(args.split_pages, title=args.title))
    _write(args.out, svg)
    if args.out not in (None, "-"):
        bad = sum(isinstance(p, Crossing) for p in validate_embedding(g, emb))
        _say(pages=emb.num_pages, crossings=bad)
    return EXIT_OK


# -------------------------------------------------------------------
#   parser
# -------------------------------------------------------------------

METHODS = ("auto", "star", "tree", "mobius", "petersen", "complete", "expansion-complete", "thm32")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="bookembed", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="write a named graph as .edg")
    p.add_argument("--family", required=True,
                   choices=("path", "cycle", "star", "complete", "bipartite", "mobius", "petersen", "tree"))
    p.add_argument("--n", type=int)
    p.add_argument("--m", type=int, help="number of star leaves")
    p.add_argument("--h", type=int, help="Mobius ladder rungs")
    p.add_argument("--a", type=int)
    p.add_argument("--b", type=int)
    p.add_argument("--parents", help="comma-separated parent list for tree")
    p.add_argument("-o", "--out")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("expand", help="write the complete expansion of a graph")
    p.add_argument("graph")
    p.add_argument("-o", "--out")
    p.add_argument("--provenance", help="also write the .exp provenance file")
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("embed", help="run a construction and write the .emb")
    p.add_argument("graph", nargs="?")
    p.add_argument("--method", choices=METHODS, default="auto")
    p.add_argument("--h", type=int)
    p.add_argument("--emb", help="embedding of the input graph (thm32)")
    p.add_argument("--provenance", help=".exp file: the input is an expansion graph")
    p.add_argument("-o", "--out")
    p.add_argument("--graph-out", help="also write the embedded graph as .edg")
    p.add_argument("--provenance-out")
    p.add_argument("--svg")
    p.add_argument("--split-pages", action="store_true")
    p.set_defaults(func=cmd_embed)

    p = sub.add_parser("validate", help="check an embedding against a graph")
    p.add_argument("graph")
    p.add_argument("emb")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("solve", help="certify the pagenumber by exact search")
    p.add_argument("graph")
    p.add_argument("--provenance")
    p.add_argument("--max-nodes", type=int, default=2_000_000)
    p.add_argument("--max-seconds", type=float, default=20.0)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("-o", "--out")
    p.add_argument("--witness", help="also write the best embedding found as .emb")
    p.set_defaults(func=cmd_solve)

    for name in ("info", "bounds"):
        p = sub.add_parser(name, help="summary with pagenumber bounds")
        p.add_argument("graph")
        p.add_argument("--provenance")
        p.set_defaults(func=cmd_info)

    p = sub.add_parser("render", help="draw an embedding as an SVG arc diagram")
    p.add_argument("graph")
    p.add_argument("emb")
    p.add_argument("-o", "--out")
    p.add_argument("--split-pages", action="store_true")
    p.add_argument("--title")
    p.set_defaults(func=cmd_render)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

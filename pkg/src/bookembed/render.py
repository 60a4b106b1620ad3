"""SVG arc diagrams of book embeddings.

Vertices sit on a horizontal spine in spine order; page-0 edges are drawn as
segments on the spine, every other page as semicircular arcs above it in
that page's colour. Edges involved in a crossing are drawn dashed in
``CROSSING_COLOUR`` whatever their page. Output is a pure function of the
inputs, byte for byte.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence
from xml.sax.saxutils import escape

from .book import BookEmbedding, Crossing, validate_embedding
from .graphs import Graph

PALETTE = (
    "#1f77b4", "#ff7f0e", "#2ca02c", "#9467bd", "#8c564b", "#e377c2",
    "#7f7f7f", "#bcbd22", "#17becf", "#393b79", "#637939", "#843c39",
)
CROSSING_COLOUR = "#d62728"
SPINE_COLOUR = "#000000"


@dataclass(frozen=True)
class RenderOptions:
    split_pages: bool = False
    spacing: int = 40
    margin: int = 30
    vertex_radius: float = 3.5
    labels: Sequence[str] | None = None
    title: str | None = None


def page_colour(p: int) -> str:
    return SPINE_COLOUR if p == 0 else PALETTE[(p - 1) % len(PALETTE)]


def render_arc_diagram(g: Graph, emb: BookEmbedding, options: RenderOptions | None = None) -> str:
    opt = options or RenderOptions()
    pos = emb.positions
    crossing_edges = set()
    for item in validate_embedding(g, emb):
        if isinstance(item, Crossing):
            crossing_edges.update((g.edges[item.e1], g.edges[item.e2]))

    pages = emb.used_pages
    panels = [[p] for p in pages] if opt.split_pages and pages else [pages]
    max_span = max((abs(pos[u] - pos[v]) for u, v in g.edges), default=1)
    arc_height = max_span * opt.spacing / 2
    legend_h = 16 * (len(pages) + 1)
    title_h = 20 if opt.title else 0
    panel_h = arc_height + 2 * opt.margin + 14
    width = opt.margin * 2 + max(g.n - 1, 1) * opt.spacing + 90
    height = title_h + panel_h * len(panels) + legend_h

    def x(v: int) -> float:
        return opt.margin + pos[v] * opt.spacing

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width:.0f}" height="{height:.0f}" '
        f'viewBox="0 0 {width:.0f} {height:.0f}">',
        f'<rect width="{width:.0f}" height="{height:.0f}" fill="#ffffff"/>',
    ]
    if opt.title:
        out.append(f'<text x="{opt.margin}" y="16" font-family="sans-serif" font-size="13">'
                   f'{escape(opt.title)}</text>')

    for k, panel in enumerate(panels):
        base = title_h + k * panel_h + opt.margin + arc_height
        out.append(f'<g class="panel" data-pages="{" ".join(map(str, panel))}">')
        out.append(f'<line class="axis" x1="{opt.margin - 10}" y1="{base:.1f}" '
                   f'x2="{x(emb.spine[-1]) + 10 if g.n else opt.margin:.1f}" y2="{base:.1f}" '
                   'stroke="#cccccc" stroke-width="1"/>')
        for e in g.edges:
            p = emb.page_of.get(e)
            u, v = sorted(e, key=pos.__getitem__)
            crossing = e in crossing_edges
            style = (f'stroke="{CROSSING_COLOUR}" stroke-dasharray="4 3"' if crossing
                     else f'stroke="{page_colour(p or 0)}"')
            if p == 0:
                out.append(f'<line class="spine-edge" x1="{x(u):.1f}" y1="{base:.1f}" '
                           f'x2="{x(v):.1f}" y2="{base:.1f}" {style} stroke-width="2"/>')
            elif p in panel:
                r = (x(v) - x(u)) / 2
                out.append(f'<path class="arc{" crossing" if crossing else ""}" data-page="{p}" '
                           f'd="M {x(u):.1f} {base:.1f} A {r:.1f} {r:.1f} 0 0 1 {x(v):.1f} {base:.1f}" '
                           f'fill="none" {style} stroke-width="1.5"/>')
        for v in emb.spine:
            label = opt.labels[v] if opt.labels is not None else str(v)
            out.append(f'<circle class="vertex" cx="{x(v):.1f}" cy="{base:.1f}" '
                       f'r="{opt.vertex_radius}" fill="#000000"/>')
            out.append(f'<text class="label" x="{x(v):.1f}" y="{base + 14:.1f}" '
                       f'font-family="sans-serif" font-size="9" text-anchor="middle">'
                       f'{escape(label)}</text>')
        if opt.split_pages:
            out.append(f'<text x="{width - 80:.0f}" y="{base - arc_height:.1f}" '
                       f'font-family="sans-serif" font-size="11">page {panel[0]}</text>')
        out.append("</g>")

    legend_y = title_h + panel_h * len(panels)
    out.append('<g class="legend">')
    for i, p in enumerate([0] + pages):
        y = legend_y + 12 + 16 * i
        name = "spine" if p == 0 else f"page {p}"
        out.append(f'<line x1="{opt.margin}" y1="{y - 4}" x2="{opt.margin + 20}" y2="{y - 4}" '
                   f'stroke="{page_colour(p)}" stroke-width="2"/>')
        out.append(f'<text x="{opt.margin + 26}" y="{y}" font-family="sans-serif" '
                   f'font-size="11">{name}</text>')
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"

"""Static SVG pictures of patchworks.

Draws the triangulation as thin strokes, lattice points as sign-colored
disks, and the patchworked curve as bold closed paths through crossed-edge
midpoints.  The full diamond with extended signs is the default; a
quadrant-only view shows just the input triangulation and the curve pieces
inside it.  Output bytes are a pure function of the inputs.
"""

from __future__ import annotations

from dataclasses import dataclass

from .diamond import extend_signs, reflect
from .lattice import Triangulation, lattice_points, point_index
from .oracle import build_piece_complex, trace_components
from .signs import SignDistribution

PLUS_COLOR = "#c83c28"
MINUS_COLOR = "#1e50a0"


@dataclass(frozen=True)
class RenderOptions:
    quadrant_only: bool = False
    show_signs: bool = True
    show_curve: bool = True
    edge_width: float = 1.0
    curve_width: float = 3.0
    point_radius: float = 4.0
    plus_color: str = PLUS_COLOR
    minus_color: str = MINUS_COLOR
    scale: int = 40
    margin: int = 20


def _fmt(v: float) -> str:
    return f"{v:.1f}"


def _quadrant_curve_paths(T: Triangulation, sigma: SignDistribution):
    """Open/closed midpoint polylines of the curve restricted to A(d)."""
    idx = point_index(T.degree)
    bit = {p: sigma.bits[k] for p, k in idx.items()}
    segments = []
    for a, b, c in T.triangles:
        sa, sb, sc = bit[a], bit[b], bit[c]
        if sa == sb == sc:
            continue
        m = c if sa == sb else (b if sa == sc else a)
        others = [v for v in (a, b, c) if v != m]
        e1 = tuple(sorted((m, others[0])))
        e2 = tuple(sorted((m, others[1])))
        segments.append(tuple(sorted((e1, e2))))
    links: dict = {}
    for k, (e1, e2) in enumerate(segments):
        links.setdefault(e1, []).append(k)
        links.setdefault(e2, []).append(k)

    seen = set()
    paths = []

    def walk(k0, start_edge):
        chain = [start_edge]
        seg, edge = k0, start_edge
        while True:
            seen.add(seg)
            e1, e2 = segments[seg]
            edge = e2 if edge == e1 else e1
            chain.append(edge)
            nxts = [k for k in links[edge] if k != seg]
            if not nxts or nxts[0] in seen:
                return chain, bool(nxts)
            seg = nxts[0]

    # open paths first (their end midpoints meet only one triangle)
    for k0 in range(len(segments)):
        if k0 in seen:
            continue
        e1, e2 = segments[k0]
        if len(links[e1]) == 1:
            chain, _ = walk(k0, e1)
            paths.append((chain, False))
        elif len(links[e2]) == 1:
            chain, _ = walk(k0, e2)
            paths.append((chain, False))
    for k0 in range(len(segments)):
        if k0 not in seen:
            chain, closed = walk(k0, segments[k0][0])
            paths.append((chain[:-1] if closed else chain, closed))
    return paths


def render_svg(
    T: Triangulation,
    sigma: SignDistribution,
    options: RenderOptions = RenderOptions(),
) -> str:
    d = T.degree
    opt = options
    if opt.quadrant_only:
        width = 2 * opt.margin + d * opt.scale

        def xy(p):
            return (
                opt.margin + p[0] * opt.scale,
                opt.margin + (d - p[1]) * opt.scale,
            )

        draw_edges = [(p, q) for p, q in T.edges]
        pts = lattice_points(d)
        signs = {p: b for p, b in zip(pts, sigma.bits)}
        curve_paths = (
            _quadrant_curve_paths(T, sigma) if opt.show_curve else []
        )

        def midpoint(e):
            (p, q) = e
            return ((p[0] + q[0]) / 2, (p[1] + q[1]) / 2)

    else:
        width = 2 * opt.margin + 2 * d * opt.scale

        def xy(p):
            return (
                opt.margin + (p[0] + d) * opt.scale,
                opt.margin + (d - p[1]) * opt.scale,
            )

        D = reflect(T)
        full = extend_signs(D, sigma)
        draw_edges = [(D.points[u], D.points[v]) for u, v in D.edges]
        pts = list(D.points)
        signs = {p: int(full[k]) for k, p in enumerate(D.points)}
        curve_paths = []
        if opt.show_curve:
            pc = build_piece_complex(D, full)
            for _, _, edge_order in trace_components(pc):
                chain = [
                    (
                        (D.points[u][0] + D.points[v][0]) / 2,
                        (D.points[u][1] + D.points[v][1]) / 2,
                    )
                    for u, v in edge_order
                ]
                curve_paths.append((chain, True))

        def midpoint(c):
            return c

    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" '
        f'height="{width}" viewBox="0 0 {width} {width}">',
    ]
    for p, q in draw_edges:
        (x1, y1), (x2, y2) = xy(p), xy(q)
        lines.append(
            f'<line x1="{_fmt(x1)}" y1="{_fmt(y1)}" x2="{_fmt(x2)}" '
            f'y2="{_fmt(y2)}" stroke="#999999" stroke-width="{opt.edge_width}"/>'
        )
    for p in pts:
        x, y = xy(p)
        if opt.show_signs:
            color = opt.minus_color if signs[p] else opt.plus_color
        else:
            color = "#888888"
        lines.append(
            f'<circle cx="{_fmt(x)}" cy="{_fmt(y)}" r="{opt.point_radius}" '
            f'fill="{color}"/>'
        )
    for chain, closed in curve_paths:
        coords = [xy(midpoint(c)) for c in chain]
        body = " L ".join(f"{_fmt(x)} {_fmt(y)}" for x, y in coords)
        z = " Z" if closed else ""
        lines.append(
            f'<path d="M {body}{z}" fill="none" stroke="#141414" '
            f'stroke-width="{opt.curve_width}"/>'
        )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"

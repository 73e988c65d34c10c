"""Independent naive classifier over an explicit cell complex of pieces.

Used only for differential testing.  Mechanically unrelated to the staged
union-find pipeline: each triangle of the reflected triangulation is cut
into pieces (a uniform triangle stays whole; a mixed triangle splits into
the minority-corner triangle and the majority quadrilateral along the
segment joining its two crossed-edge midpoints), pieces are glued across
shared edge fragments and across the antipodal boundary identification
with an orientation-reversal flag, regions are flood-filled over pieces,
and curve components are traced segment by segment.  A component is a
pseudoline exactly when its cycle runs through an odd number of boundary
identifications.  Clarity over speed throughout.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .diamond import DiamondComplex, extend_signs, reflect
from .errors import InvariantViolation
from .lattice import Triangulation, harnack_bound
from .pipeline import ClassificationResult
from .scheme import SchemeNode, SchemeTree, canonical_scheme
from .signs import SignDistribution

WHOLE, QUAD, CORNER = 0, 0, 1  # piece slot within a triangle


@dataclass
class PieceComplex:
    degree: int
    npieces: int
    piece_of: dict[tuple[int, int], int]  # (triangle index, slot) -> piece id
    adjacency: list[tuple[int, int, int]]  # piece, piece, orientation flip
    segments: list[tuple[int, int, int]]  # triangle index, crossed edge, crossed edge
    gluings: list[tuple[int, int]]  # antipodal pairs of crossed boundary edges
    minority: dict[int, int]  # mixed triangle index -> its minority vertex


def _edge_key(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


def build_piece_complex(D: DiamondComplex, signs: np.ndarray) -> PieceComplex:
    d = D.degree
    index = D.index
    on_boundary = [abs(p[0]) + abs(p[1]) == d for p in D.points]

    tri_of_edge: dict[tuple[int, int], list[int]] = {}
    for t, (a, b, c) in enumerate(D.triangles):
        for u, v in ((a, b), (b, c), (a, c)):
            tri_of_edge.setdefault(_edge_key(u, v), []).append(t)

    minority: dict[int, int] = {}
    piece_of: dict[tuple[int, int], int] = {}
    npieces = 0
    for t, (a, b, c) in enumerate(D.triangles):
        sa, sb, sc = signs[a], signs[b], signs[c]
        if sa == sb == sc:
            piece_of[(t, WHOLE)] = npieces
            npieces += 1
        else:
            if sa == sb:
                minority[t] = c
            elif sa == sc:
                minority[t] = b
            else:
                minority[t] = a
            piece_of[(t, QUAD)] = npieces
            piece_of[(t, CORNER)] = npieces + 1
            npieces += 2

    def piece_at(t: int, vertex_side: int | None, edge: tuple[int, int]) -> int:
        """Piece of triangle t touching the given (half-)edge.

        ``vertex_side`` names the endpoint for a crossed-edge half, or is
        None for a whole non-crossed edge.
        """
        m = minority.get(t)
        if m is None:
            return piece_of[(t, WHOLE)]
        if vertex_side is None:
            return piece_of[(t, QUAD)]
        return piece_of[(t, CORNER)] if vertex_side == m else piece_of[(t, QUAD)]

    adjacency: list[tuple[int, int, int]] = []
    segments: list[tuple[int, int, int]] = []
    gluings: list[tuple[int, int]] = []

    # one curve segment per mixed triangle; it separates corner from quad,
    # so those two pieces are deliberately not glued to each other
    for t in sorted(minority):
        a, b, c = D.triangles[t]
        m = minority[t]
        others = [v for v in (a, b, c) if v != m]
        e1, e2 = _edge_key(m, others[0]), _edge_key(m, others[1])
        segments.append((t, *sorted((e1, e2))))

    antipode = {index[p]: index[(-p[0], -p[1])] for p in D.points}

    for e, tris in sorted(tri_of_edge.items()):
        u, v = e
        crossed = signs[u] != signs[v]
        if len(tris) == 2:
            t1, t2 = tris
            if crossed:
                adjacency.append((piece_at(t1, u, e), piece_at(t2, u, e), 0))
                adjacency.append((piece_at(t1, v, e), piece_at(t2, v, e), 0))
            else:
                adjacency.append((piece_at(t1, None, e), piece_at(t2, None, e), 0))
        else:
            (t1,) = tris
            if not (on_boundary[u] and on_boundary[v]):
                raise InvariantViolation(
                    f"interior edge {D.points[u]}-{D.points[v]} borders one triangle"
                )
            ea = _edge_key(antipode[u], antipode[v])
            if ea < e:
                continue  # glue each boundary pair once
            (t2,) = tri_of_edge[ea]
            if crossed:
                adjacency.append((piece_at(t1, u, e), piece_at(t2, antipode[u], ea), 1))
                adjacency.append((piece_at(t1, v, e), piece_at(t2, antipode[v], ea), 1))
                gluings.append(tuple(sorted((e, ea))))
            else:
                adjacency.append((piece_at(t1, None, e), piece_at(t2, None, ea), 1))

    return PieceComplex(d, npieces, piece_of, adjacency, segments, gluings, minority)


def _regions_and_orientability(pc: PieceComplex) -> tuple[list[int], set[int]]:
    """Flood fill pieces into regions; collect non-orientable region ids.

    Propagates an orientation bit that flips across antipodal gluings; a
    revisit with mismatched bit exposes an orientation-reversing cycle.
    """
    nbrs: dict[int, list[tuple[int, int]]] = {p: [] for p in range(pc.npieces)}
    for p, q, flip in pc.adjacency:
        nbrs[p].append((q, flip))
        nbrs[q].append((p, flip))

    region = [-1] * pc.npieces
    orient = [0] * pc.npieces
    bad: set[int] = set()
    nreg = 0
    for start in range(pc.npieces):
        if region[start] >= 0:
            continue
        rid = nreg
        nreg += 1
        region[start] = rid
        orient[start] = 0
        stack = [start]
        while stack:
            p = stack.pop()
            for q, flip in nbrs[p]:
                want = orient[p] ^ flip
                if region[q] < 0:
                    region[q] = rid
                    orient[q] = want
                    stack.append(q)
                elif orient[q] != want:
                    bad.add(rid)
    return region, bad


def trace_components(pc: PieceComplex):
    """Cycles of curve segments with gluing counts and midpoint edge order.

    Every crossed-edge midpoint has exactly two curve links (segments of
    mixed triangles, or the antipodal identification of boundary edges),
    so the curve decomposes into cycles.
    """
    links: dict[tuple[int, int], list[tuple[str, int]]] = {}
    for k, (t, e1, e2) in enumerate(pc.segments):
        links.setdefault(e1, []).append(("seg", k))
        links.setdefault(e2, []).append(("seg", k))
    for k, (e, ea) in enumerate(pc.gluings):
        links.setdefault(e, []).append(("glue", k))
        links.setdefault(ea, []).append(("glue", k))
    for e, ls in links.items():
        if len(ls) != 2:
            raise InvariantViolation(
                f"crossed edge {e} met {len(ls)} curve links, expected 2"
            )

    seen_seg: set[int] = set()
    cycles = []
    for k0 in range(len(pc.segments)):
        if k0 in seen_seg:
            continue
        seg_ids = [k0]
        seen_seg.add(k0)
        glue_count = 0
        t, e1, e2 = pc.segments[k0]
        start_edge, edge = e1, e2
        edge_order = [e1, e2]
        prev = ("seg", k0)
        while edge != start_edge:
            nxt = next(l for l in links[edge] if l != prev)
            kind, k = nxt
            if kind == "glue":
                glue_count += 1
                e, ea = pc.gluings[k]
                edge = ea if edge == e else e
            else:
                seen_seg.add(k)
                seg_ids.append(k)
                _, f1, f2 = pc.segments[k]
                edge = f2 if edge == f1 else f1
            if edge != start_edge:
                edge_order.append(edge)
            prev = nxt
        cycles.append((seg_ids, glue_count, edge_order))
    return cycles


def oracle_classify(T: Triangulation, sigma: SignDistribution) -> ClassificationResult:
    """Classify by explicit flood fill and curve tracing; the differential oracle."""
    D = reflect(T)
    signs = extend_signs(D, sigma)
    pc = build_piece_complex(D, signs)

    uniform = sum(1 for t in range(len(D.triangles)) if t not in pc.minority)
    if pc.npieces != uniform + 2 * len(pc.minority):
        raise InvariantViolation("piece count mismatch")

    region_of_piece, nonorientable = _regions_and_orientability(pc)
    nreg = max(region_of_piece) + 1
    cycles = trace_components(pc)

    sides = []
    for seg_ids, glue_count, _ in cycles:
        pair = None
        for k in seg_ids:
            t, _, _ = pc.segments[k]
            p = (
                region_of_piece[pc.piece_of[(t, CORNER)]],
                region_of_piece[pc.piece_of[(t, QUAD)]],
            )
            p = (min(p), max(p))
            if pair is None:
                pair = p
            elif pair != p:
                raise InvariantViolation(
                    f"curve component with inconsistent sides {pair} vs {p}"
                )
        sides.append((pair, glue_count % 2 == 1))

    pseudolines = [pair for pair, is_pl in sides if is_pl]
    ovals = [pair for pair, is_pl in sides if not is_pl]
    d = T.degree
    if len(pseudolines) != d % 2:
        raise InvariantViolation(
            f"degree {d} traced {len(pseudolines)} pseudolines"
        )
    if len(ovals) + len(pseudolines) > harnack_bound(d):
        raise InvariantViolation("component count beyond the degree bound")

    if d % 2 == 0:
        if len(nonorientable) != 1:
            raise InvariantViolation(
                f"even degree found {len(nonorientable)} non-orientable regions"
            )
        root = next(iter(nonorientable))
    else:
        if nonorientable:
            raise InvariantViolation(
                "odd degree must have only orientable regions"
            )
        (pl_pair,) = pseudolines
        if pl_pair[0] != pl_pair[1]:
            raise InvariantViolation("pseudoline with two distinct sides")
        root = pl_pair[0]

    for pair in ovals:
        if pair[0] == pair[1]:
            raise InvariantViolation("oval with both sides in one region")
    if len(set(ovals)) != len(ovals) or len(ovals) != nreg - 1:
        raise InvariantViolation(
            f"oval sides do not form a tree on {nreg} regions"
        )

    nbrs: dict[int, list[int]] = {r: [] for r in range(nreg)}
    for a, b in ovals:
        nbrs[a].append(b)
        nbrs[b].append(a)
    nodes = [SchemeNode() for _ in range(nreg)]
    seen = {root}
    stack = [root]
    while stack:
        r = stack.pop()
        for s in nbrs[r]:
            if s not in seen:
                seen.add(s)
                nodes[r].children.append(nodes[s])
                stack.append(s)
    if len(seen) != nreg:
        raise InvariantViolation("region tree is disconnected")

    tree = SchemeTree(nodes[root], has_pseudoline=d % 2 == 1)
    return ClassificationResult(
        scheme=canonical_scheme(tree),
        oval_count=len(ovals),
        region_count=nreg,
        has_pseudoline=d % 2 == 1,
    )

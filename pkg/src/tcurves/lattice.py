"""Lattice geometry of the dilated standard triangle.

The degree-d point set is A(d) = {(i, j) : i, j >= 0, i + j <= d}, the
lattice points of d times the standard triangle.  Triangulations of A(d)
are exchanged as edge lists; triangles are reconstructed from the planar
subdivision and kept alongside.  All geometric predicates are exact
integer arithmetic.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from functools import cmp_to_key

import numpy as np

from .errors import (
    InvalidDegree,
    NotATriangulation,
    NotUnimodular,
    PointOutOfRange,
)

Point = tuple[int, int]
Edge = tuple[Point, Point]


def lattice_points(d: int) -> list[Point]:
    """All points of A(d) sorted lexicographically by (i, j).

    This order defines the canonical point index used by every sign codec.
    """
    if d < 1:
        raise InvalidDegree(f"degree must be >= 1, got {d}")
    return [(i, j) for i in range(d + 1) for j in range(d + 1 - i)]


def num_points(d: int) -> int:
    return (d + 1) * (d + 2) // 2


def point_index(d: int) -> dict[Point, int]:
    """Map from point to its canonical index."""
    return {p: k for k, p in enumerate(lattice_points(d))}


def num_edges_unimodular(d: int) -> int:
    return (3 * d * d + 3 * d) // 2


def harnack_bound(d: int) -> int:
    """Maximum number of connected components of a degree-d real curve."""
    return (d - 1) * (d - 2) // 2 + 1


def orient2d(a: Point, b: Point, c: Point) -> int:
    """Sign of the doubled signed area of triangle (a, b, c)."""
    v = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])
    return (v > 0) - (v < 0)


def doubled_area(a: Point, b: Point, c: Point) -> int:
    return abs((b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]))


def normalize_edge(p: Point, q: Point) -> Edge:
    return (p, q) if p <= q else (q, p)


def normalize_triangle(a: Point, b: Point, c: Point) -> tuple[Point, Point, Point]:
    t = sorted((a, b, c))
    return (t[0], t[1], t[2])


@dataclass(frozen=True)
class Triangulation:
    """A triangulation of A(degree), stored as edges plus derived triangles.

    Instances are built by :func:`validate_triangulation`, the lifting
    projection, flips, or the builtin catalog; they are immutable and safe
    to share across threads.
    """

    degree: int
    edges: tuple[Edge, ...]
    triangles: tuple[tuple[Point, Point, Point], ...]

    @property
    def edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges)

    def points_used(self) -> set[Point]:
        return {p for e in self.edges for p in e}

    @property
    def is_unimodular(self) -> bool:
        d = self.degree
        return (
            len(self.edges) == num_edges_unimodular(d)
            and len(self.triangles) == d * d
            and len(self.points_used()) == num_points(d)
            and all(doubled_area(*t) == 1 for t in self.triangles)
        )

    def fingerprint(self) -> str:
        """Content hash of the degree and sorted edge list."""
        payload = json.dumps(
            {"degree": self.degree, "edges": sorted(self.edges)},
            separators=(",", ":"),
        )
        return hashlib.sha256(payload.encode()).hexdigest()

    def interior_edges(self) -> dict[Edge, tuple[Point, Point]]:
        """Map each interior edge to the opposite vertices of its two triangles."""
        by_edge: dict[Edge, list[Point]] = {}
        for a, b, c in self.triangles:
            by_edge.setdefault(normalize_edge(a, b), []).append(c)
            by_edge.setdefault(normalize_edge(b, c), []).append(a)
            by_edge.setdefault(normalize_edge(a, c), []).append(b)
        return {e: (opp[0], opp[1]) for e, opp in by_edge.items() if len(opp) == 2}


def _check_pslg(edges: list[Edge]) -> None:
    """Reject proper crossings, T-joints and collinear overlaps, exactly.

    Vectorized with int64 numpy; coordinates are tiny so no overflow.
    """
    m = len(edges)
    a = np.array([e[0] for e in edges], dtype=np.int64)
    b = np.array([e[1] for e in edges], dtype=np.int64)

    def orient(px, py, qx, qy, rx, ry):
        return (qx - px) * (ry - py) - (qy - py) * (rx - px)

    # pairwise proper-crossing test, in row blocks to bound memory
    block = max(1, 2_000_000 // max(m, 1))
    for lo in range(0, m, block):
        hi = min(lo + block, m)
        d1 = orient(a[lo:hi, None, 0], a[lo:hi, None, 1], b[lo:hi, None, 0], b[lo:hi, None, 1], a[None, :, 0], a[None, :, 1])
        d2 = orient(a[lo:hi, None, 0], a[lo:hi, None, 1], b[lo:hi, None, 0], b[lo:hi, None, 1], b[None, :, 0], b[None, :, 1])
        d3 = orient(a[None, :, 0], a[None, :, 1], b[None, :, 0], b[None, :, 1], a[lo:hi, None, 0], a[lo:hi, None, 1])
        d4 = orient(a[None, :, 0], a[None, :, 1], b[None, :, 0], b[None, :, 1], b[lo:hi, None, 0], b[lo:hi, None, 1])
        bad = (d1 * d2 < 0) & (d3 * d4 < 0)
        if bad.any():
            i, j = np.argwhere(bad)[0]
            raise NotATriangulation(
                f"edges {edges[lo + int(i)]} and {edges[int(j)]} cross"
            )

    # no endpoint may lie strictly inside another edge
    verts = np.array(sorted({p for e in edges for p in e}), dtype=np.int64)
    cross = orient(a[:, None, 0], a[:, None, 1], b[:, None, 0], b[:, None, 1], verts[None, :, 0], verts[None, :, 1])
    dot = (verts[None, :, 0] - a[:, None, 0]) * (verts[None, :, 0] - b[:, None, 0]) + (
        verts[None, :, 1] - a[:, None, 1]
    ) * (verts[None, :, 1] - b[:, None, 1])
    bad = (cross == 0) & (dot < 0)
    if bad.any():
        i, j = np.argwhere(bad)[0]
        raise NotATriangulation(
            f"point {tuple(int(x) for x in verts[j])} lies inside edge {edges[int(i)]}"
        )


def _angular_key(origin: Point):
    """Comparator ordering neighbor points counterclockwise around origin."""

    def half(p: Point) -> int:
        dx, dy = p[0] - origin[0], p[1] - origin[1]
        return 0 if (dy > 0 or (dy == 0 and dx > 0)) else 1

    def cmp(p: Point, q: Point) -> int:
        hp, hq = half(p), half(q)
        if hp != hq:
            return -1 if hp < hq else 1
        s = orient2d(origin, p, q)
        return -s

    return cmp_to_key(cmp)


def _reconstruct_faces(edges: list[Edge]) -> list[list[Point]]:
    """Walk the planar subdivision and return all face cycles.

    Interior faces come out counterclockwise, the outer face clockwise.
    """
    nbrs: dict[Point, list[Point]] = {}
    for p, q in edges:
        nbrs.setdefault(p, []).append(q)
        nbrs.setdefault(q, []).append(p)
    pos: dict[tuple[Point, Point], int] = {}
    for v, ns in nbrs.items():
        ns.sort(key=_angular_key(v))
        for k, w in enumerate(ns):
            pos[(v, w)] = k

    faces = []
    seen: set[tuple[Point, Point]] = set()
    for p, q in edges:
        for u, v in ((p, q), (q, p)):
            if (u, v) in seen:
                continue
            cycle = []
            cu, cv = u, v
            while (cu, cv) not in seen:
                seen.add((cu, cv))
                cycle.append(cu)
                ns = nbrs[cv]
                k = pos[(cv, cu)]
                w = ns[(k - 1) % len(ns)]
                cu, cv = cv, w
            faces.append(cycle)
    return faces


def _signed_doubled_area(cycle: list[Point]) -> int:
    s = 0
    for k, (x0, y0) in enumerate(cycle):
        x1, y1 = cycle[(k + 1) % len(cycle)]
        s += x0 * y1 - x1 * y0
    return s


def validate_triangulation(
    d: int, edges, require_unimodular: bool = True
) -> Triangulation:
    """Check an edge list and return the triangulation with triangles filled in.

    Raises PointOutOfRange for endpoints outside A(d), NotATriangulation if
    the edges do not subdivide the full dilated triangle into triangles, and
    NotUnimodular (unless disabled) if some lattice point is unused or the
    edge/triangle counts are off.
    """
    if d < 1:
        raise InvalidDegree(f"degree must be >= 1, got {d}")
    norm: set[Edge] = set()
    for e in edges:
        (p, q) = e
        p, q = (int(p[0]), int(p[1])), (int(q[0]), int(q[1]))
        for pt in (p, q):
            if pt[0] < 0 or pt[1] < 0 or pt[0] + pt[1] > d:
                raise PointOutOfRange(f"point {pt} outside degree-{d} lattice")
        if p == q:
            raise NotATriangulation(f"degenerate edge at {p}")
        norm.add(normalize_edge(p, q))
    if not norm:
        raise NotATriangulation("empty edge list")
    edge_list = sorted(norm)

    _check_pslg(edge_list)

    faces = _reconstruct_faces(edge_list)
    triangles = []
    outer = 0
    area = 0
    for cyc in faces:
        s = _signed_doubled_area(cyc)
        if s < 0:
            outer += 1
            continue
        if len(cyc) != 3 or s == 0:
            raise NotATriangulation(
                f"non-triangular face with {len(cyc)} sides near {cyc[0]}"
            )
        area += s
        triangles.append(normalize_triangle(*cyc))
    if outer != 1 or area != d * d:
        raise NotATriangulation(
            f"subdivision does not cover the degree-{d} triangle "
            f"(covered doubled area {area} of {d * d})"
        )

    tri = Triangulation(d, tuple(edge_list), tuple(sorted(triangles)))
    if require_unimodular and not tri.is_unimodular:
        raise NotUnimodular(
            f"{len(edge_list)} edges, {len(triangles)} triangles, "
            f"{len(tri.points_used())} of {num_points(d)} points used"
        )
    return tri


# ---------------------------------------------------------------------------
# symmetries of the dilated triangle


@dataclass(frozen=True)
class SymmetryElement:
    """Permutation of the barycentric coordinates (i, j, d-i-j).

    ``perm[k]`` names which input coordinate lands in slot k of the output.
    """

    name: str
    perm: tuple[int, int, int]

    def apply(self, d: int, p: Point) -> Point:
        c = (p[0], p[1], d - p[0] - p[1])
        return (c[self.perm[0]], c[self.perm[1]])

    def compose(self, other: "SymmetryElement") -> "SymmetryElement":
        perm = tuple(other.perm[k] for k in self.perm)
        return _BY_PERM[perm]


IDENTITY = SymmetryElement("e", (0, 1, 2))
ROTATION = SymmetryElement("r", (2, 0, 1))  # (i, j) -> (d-i-j, i)
TRANSPOSE = SymmetryElement("t", (1, 0, 2))  # (i, j) -> (j, i)

SYMMETRY_GROUP = (
    IDENTITY,
    ROTATION,
    SymmetryElement("rr", (1, 2, 0)),
    TRANSPOSE,
    SymmetryElement("tr", (2, 1, 0)),
    SymmetryElement("trr", (0, 2, 1)),
)

_BY_PERM = {g.perm: g for g in SYMMETRY_GROUP}


def symmetry_element(name: str) -> SymmetryElement:
    for g in SYMMETRY_GROUP:
        if g.name == name:
            return g
    raise KeyError(name)


def map_triangulation(T: Triangulation, g: SymmetryElement) -> Triangulation:
    """Image of a triangulation under a symmetry of the triangle."""
    d = T.degree
    edges = tuple(
        sorted(normalize_edge(g.apply(d, p), g.apply(d, q)) for p, q in T.edges)
    )
    tris = tuple(
        sorted(normalize_triangle(*(g.apply(d, p) for p in t)) for t in T.triangles)
    )
    return Triangulation(d, edges, tris)

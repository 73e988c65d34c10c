"""Regular triangulations as lower convex hull projections.

A lifting assigns an integer height to every point of A(d); projecting the
lower faces of the lifted point set back to the plane yields a regular
subdivision.  Degenerate (non-triangular) lower faces are refined by a
symbolic lexicographic perturbation: point k is raised by eps^(k+1) for an
infinitesimal eps, with k the canonical point index.  This makes the
projection total and deterministic; ties never drop points, but a point
lifted strictly above the lower hull is genuinely unused and the resulting
triangulation is then not unimodular.
"""

from __future__ import annotations

from .errors import InvalidDegree
from .lattice import (
    Point,
    Triangulation,
    lattice_points,
    normalize_edge,
    normalize_triangle,
    orient2d,
)

Lifting = dict[Point, int]


def delaunay_lifting(d: int) -> Lifting:
    """The strictly convex quadratic lifting i^2 + i*j + j^2."""
    return {(i, j): i * i + i * j + j * j for i, j in lattice_points(d)}


def _eps_sign(base: int, coeffs: list[tuple[int, int]]) -> int:
    """Sign of base + sum(c * eps^(k+1)) for infinitesimal eps > 0.

    ``coeffs`` holds (point index, integer coefficient) pairs; smaller index
    means a dominant perturbation term.
    """
    if base != 0:
        return 1 if base > 0 else -1
    for _, c in sorted(coeffs):
        if c != 0:
            return 1 if c > 0 else -1
    return 0


def _above_sign(pts, heights, a, b, c, p) -> int:
    """Perturbed sign of the height of lifted p over the plane of lifted (a, b, c).

    Positive means strictly above when (a, b, c) is counterclockwise.
    """
    ax, ay = pts[a]
    bx, by = pts[b]
    cx, cy = pts[c]
    px, py = pts[p]
    # minors of the 3x3 determinant with height column expanded
    A = (cx - ax) * (py - ay) - (cy - ay) * (px - ax)
    B = (bx - ax) * (py - ay) - (by - ay) * (px - ax)
    C = (bx - ax) * (cy - ay) - (by - ay) * (cx - ax)
    base = (heights[b] - heights[a]) * A - (heights[c] - heights[a]) * B + (
        heights[p] - heights[a]
    ) * C
    coeffs = [(b, A), (c, -B), (p, C), (a, -A + B - C)]
    return _eps_sign(base, coeffs)


def _turn_sign_1d(xs, heights, a, b, c) -> int:
    """Perturbed turn of the lifted 1D points a, b, c; positive = convex down."""
    base = (xs[b] - xs[a]) * (heights[c] - heights[a]) - (xs[c] - xs[a]) * (
        heights[b] - heights[a]
    )
    coeffs = [(a, xs[c] - xs[b]), (b, -(xs[c] - xs[a])), (c, xs[b] - xs[a])]
    return _eps_sign(base, coeffs)


def from_lifting(d: int, lifting: Lifting) -> Triangulation:
    """Project the perturbed lower convex hull of the lifted points of A(d).

    Returns the triangulation refining the regular subdivision induced by
    the lifting.  The output is regular by construction; it is unimodular
    exactly when every lifted point lies on the lower hull.
    """
    if d < 1:
        raise InvalidDegree(f"degree must be >= 1, got {d}")
    pts = lattice_points(d)
    n = len(pts)
    heights = [int(lifting[p]) for p in pts]
    missing = [p for p in pts if p not in lifting]
    if missing:
        raise KeyError(f"lifting undefined at {missing[0]}")

    # seed with the 1D lower hull of the bottom side, walked left to right
    bottom = [k for k, p in enumerate(pts) if p[1] == 0]
    bottom.sort(key=lambda k: pts[k][0])
    xs = {k: pts[k][0] for k in bottom}
    chain: list[int] = []
    for k in bottom:
        while len(chain) >= 2 and _turn_sign_1d(xs, heights, chain[-2], chain[-1], k) < 0:
            chain.pop()
        chain.append(k)

    def on_polygon_side(u: int, v: int) -> bool:
        (ux, uy), (vx, vy) = pts[u], pts[v]
        return (uy == 0 and vy == 0) or (ux == 0 and vx == 0) or (
            ux + uy == d and vx + vy == d
        )

    triangles = []
    edges: set[tuple[int, int]] = set()
    pending = [(chain[k], chain[k + 1]) for k in range(len(chain) - 1)]
    done: set[tuple[int, int]] = set()
    while pending:
        a, b = pending.pop()
        if (a, b) in done:
            continue
        best = -1
        for p in range(n):
            if p == a or p == b:
                continue
            if orient2d(pts[a], pts[b], pts[p]) <= 0:
                continue
            if best < 0 or _above_sign(pts, heights, a, b, best, p) < 0:
                best = p
        if best < 0:
            raise AssertionError(f"no face left of hull edge {pts[a]}-{pts[b]}")
        c = best
        triangles.append((a, b, c))
        for u, v in ((a, b), (b, c), (c, a)):
            done.add((u, v))
            edges.add((u, v) if u < v else (v, u))
        for u, v in ((c, b), (a, c)):
            if not on_polygon_side(u, v) and (u, v) not in done:
                pending.append((u, v))

    edge_tuples = tuple(
        sorted(normalize_edge(pts[u], pts[v]) for u, v in edges)
    )
    tri_tuples = tuple(
        sorted(normalize_triangle(pts[a], pts[b], pts[c]) for a, b, c in triangles)
    )
    return Triangulation(d, edge_tuples, tri_tuples)

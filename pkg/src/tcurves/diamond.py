"""The reflected triangulation on the diamond and the sign extension.

Reflecting a triangulation of A(d) through both axes and the origin tiles
the diamond {|i| + |j| <= d}; identifying antipodal boundary points turns
the diamond into a cell decomposition of the projective plane.  Signs
extend from the first quadrant by the parity of the reflected monomial
exponents:

    sign(i, -j) = sign(i, j) + j      (mod 2)
    sign(-i, j) = sign(i, j) + i      (mod 2)
    sign(-i, -j) = sign(i, j) + i + j (mod 2)
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ParseError
from .lattice import Point, Triangulation, point_index
from .signs import SignDistribution


def diamond_points(d: int) -> list[Point]:
    """All points with |i| + |j| <= d, lexicographically by (i, j)."""
    return [
        (i, j)
        for i in range(-d, d + 1)
        for j in range(-(d - abs(i)), d - abs(i) + 1)
    ]


@dataclass(frozen=True)
class DiamondComplex:
    """Reflected triangulation with antipodal boundary pairing.

    Vertices are indices into the lexicographic diamond point list; edges
    and triangles are index tuples.  ``antipodal_pairs`` holds the 2d
    boundary identifications (v, -v); for non-unimodular input, pairs of
    lattice points that are not vertices of any reflected edge are left
    out (the central symmetry makes usage antipodally consistent).
    """

    degree: int
    points: tuple[Point, ...]
    edges: tuple[tuple[int, int], ...]
    triangles: tuple[tuple[int, int, int], ...]
    antipodal_pairs: tuple[tuple[int, int], ...]

    def used_vertices(self) -> np.ndarray:
        """Mask of diamond vertices incident to at least one edge."""
        used = np.zeros(len(self.points), dtype=np.uint8)
        for u, v in self.edges:
            used[u] = 1
            used[v] = 1
        return used

    @property
    def index(self) -> dict[Point, int]:
        return {p: k for k, p in enumerate(self.points)}

    def sign_extension_tables(self) -> tuple[np.ndarray, np.ndarray]:
        """Per-vertex source index into A(d) and extension parity bit."""
        src = np.empty(len(self.points), dtype=np.int32)
        par = np.empty(len(self.points), dtype=np.uint8)
        first = point_index(self.degree)
        for k, (i, j) in enumerate(self.points):
            src[k] = first[(abs(i), abs(j))]
            par[k] = ((abs(i) if i < 0 else 0) + (abs(j) if j < 0 else 0)) % 2
        return src, par


def reflect(T: Triangulation) -> DiamondComplex:
    """Reflect a triangulation into all four quadrants over the diamond."""
    d = T.degree
    pts = diamond_points(d)
    idx = {p: k for k, p in enumerate(pts)}

    edges: set[tuple[int, int]] = set()
    triangles: set[tuple[int, int, int]] = set()
    for sx in (1, -1):
        for sy in (1, -1):
            for (p, q) in T.edges:
                u = idx[(sx * p[0], sy * p[1])]
                v = idx[(sx * q[0], sy * q[1])]
                edges.add((u, v) if u < v else (v, u))
            for (a, b, c) in T.triangles:
                t = tuple(
                    sorted(idx[(sx * p[0], sy * p[1])] for p in (a, b, c))
                )
                triangles.add(t)

    used = {u for e in edges for u in e}
    pairs = []
    for k, (i, j) in enumerate(pts):
        if abs(i) + abs(j) == d and (i, j) > (-i, -j) and k in used:
            pairs.append((idx[(-i, -j)], k))
    return DiamondComplex(
        d,
        tuple(pts),
        tuple(sorted(edges)),
        tuple(sorted(triangles)),
        tuple(sorted(pairs)),
    )


def extend_signs(D: DiamondComplex, sigma: SignDistribution) -> np.ndarray:
    """Full sign vector over the diamond vertices, one uint8 bit each."""
    if sigma.degree != D.degree:
        raise ParseError(
            f"sign degree {sigma.degree} != diamond degree {D.degree}"
        )
    src, par = D.sign_extension_tables()
    bits = np.array(sigma.bits, dtype=np.uint8)
    return bits[src] ^ par

"""Edge flips and the flip-graph census of unimodular triangulations.

Flipping replaces the diagonal of a strictly convex quadrilateral formed by
two adjacent triangles; it preserves unimodularity (two lattice triangles of
doubled area one re-split into two of doubled area one).  The census walks
the flip graph at orbit granularity: flips commute with the triangle
symmetries, so the orbits of the flips of one representative are exactly
the orbit's neighbors.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .errors import BudgetExceeded
from .lattice import (
    Edge,
    SYMMETRY_GROUP,
    TRANSPOSE,
    Triangulation,
    map_triangulation,
    normalize_edge,
    normalize_triangle,
    orient2d,
)
from .lifting import delaunay_lifting, from_lifting


def flip_neighbors(T: Triangulation) -> list[tuple[Edge, Triangulation]]:
    """All triangulations one flip away, with the edge that was flipped."""
    out = []
    for (a, b), (c, q) in sorted(T.interior_edges().items()):
        if orient2d(c, q, a) * orient2d(c, q, b) >= 0:
            continue  # quadrilateral not strictly convex
        edges = set(T.edges)
        edges.remove(normalize_edge(a, b))
        edges.add(normalize_edge(c, q))
        tris = set(T.triangles)
        tris.remove(normalize_triangle(a, b, c))
        tris.remove(normalize_triangle(a, b, q))
        tris.add(normalize_triangle(a, c, q))
        tris.add(normalize_triangle(b, c, q))
        out.append(
            (
                normalize_edge(a, b),
                Triangulation(T.degree, tuple(sorted(edges)), tuple(sorted(tris))),
            )
        )
    return out


def orbit_images(T: Triangulation) -> list[Triangulation]:
    return [map_triangulation(T, g) for g in SYMMETRY_GROUP]


def orbit_key(T: Triangulation) -> tuple[Edge, ...]:
    """Canonical form of the symmetry orbit: minimal sorted edge list."""
    return min(img.edges for img in orbit_images(T))


def orbit_representative(T: Triangulation) -> Triangulation:
    return min(orbit_images(T), key=lambda img: img.edges)


def is_symmetric_orbit(T: Triangulation) -> bool:
    """Whether the orbit contains a triangulation fixed by the transposition."""
    return any(
        map_triangulation(img, TRANSPOSE).edges == img.edges
        for img in orbit_images(T)
    )


@dataclass(frozen=True)
class CensusResult:
    degree: int
    orbit_count: int
    symmetric_count: int
    unfiltered_orbit_count: int
    orbits: tuple[Triangulation, ...]

    def summary(self) -> str:
        return f"{self.orbit_count} ({self.symmetric_count})"


def enumerate_unimodular(
    d: int,
    filter_regular: bool = True,
    long_run: bool = False,
    seed_lifting=None,
) -> CensusResult:
    """Census of unimodular triangulations of A(d) up to the order-6 symmetry.

    BFS over the flip graph, seeded from a lifting projection.  Degrees up
    to 4 run within the default budget; d = 5 requires ``long_run``; the
    census does not support d >= 6.
    """
    if d >= 6:
        raise BudgetExceeded(f"census is not supported for degree {d} (max 5)")
    if d == 5 and not long_run:
        raise BudgetExceeded("degree-5 census requires the long-run flag")

    from .regularity import is_regular

    seed = from_lifting(d, seed_lifting or delaunay_lifting(d))
    rep = orbit_representative(seed)
    orbits: dict[tuple[Edge, ...], Triangulation] = {rep.edges: rep}
    queue = deque([rep])
    while queue:
        current = queue.popleft()
        for _, flipped in flip_neighbors(current):
            key = orbit_key(flipped)
            if key not in orbits:
                r = orbit_representative(flipped)
                orbits[key] = r
                queue.append(r)

    reps = [orbits[k] for k in sorted(orbits)]
    unfiltered = len(reps)
    if filter_regular:
        reps = [r for r in reps if is_regular(r)]
    symmetric = sum(1 for r in reps if is_symmetric_orbit(r))
    return CensusResult(d, len(reps), symmetric, unfiltered, tuple(reps))

"""Catalog of embedded triangulations.

``delaunay-N`` is the projection of the quadratic lifting i^2+ij+j^2 for
any degree N; the three degree-8 entries carry hand-picked structure (the
bow tie realizes only even oval counts).  All entries validate as
unimodular on construction.
"""

from __future__ import annotations

from functools import lru_cache

from . import _figure_data
from .errors import InvalidDegree, UnknownBuiltin
from .lattice import Triangulation, validate_triangulation
from .lifting import delaunay_lifting, from_lifting

_FIGURE8 = {
    "bowtie8": _figure_data.BOWTIE8,
    "fig2-middle8": _figure_data.FIG2_MIDDLE8,
    "fig2-right8": _figure_data.FIG2_RIGHT8,
}

BUILTIN_NAMES = ("delaunay-<d>", "bowtie8", "fig2-middle8", "fig2-right8")


@lru_cache(maxsize=None)
def builtin(name: str) -> Triangulation:
    """Return a named builtin triangulation, validated."""
    if name.startswith("delaunay-"):
        try:
            d = int(name[len("delaunay-"):])
        except ValueError:
            raise UnknownBuiltin(f"unknown builtin {name!r}") from None
        if d < 1:
            raise InvalidDegree(f"degree must be >= 1, got {d}")
        T = from_lifting(d, delaunay_lifting(d))
        return validate_triangulation(d, T.edges)
    data = _FIGURE8.get(name)
    if data is None:
        raise UnknownBuiltin(
            f"unknown builtin {name!r}; available: delaunay-<d>, "
            + ", ".join(sorted(_FIGURE8))
        )
    edges = [((i1, j1), (i2, j2)) for i1, j1, i2, j2 in data]
    return validate_triangulation(8, edges)

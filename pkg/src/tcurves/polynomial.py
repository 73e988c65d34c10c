"""Polynomial term emitter for a patchwork.

One term per lattice point: sign (-1)^bit, a parameter power t^omega, and
the degree-d monomial x^i y^j z^(d-i-j).  For small enough t > 0 the zero
set of the emitted polynomial is ambient isotopic to the patchworked
curve; no evaluation or threshold estimation happens here.
"""

from __future__ import annotations

from .errors import ParseError
from .lattice import Triangulation, lattice_points
from .signs import SignDistribution

Term = tuple[int, int, int, int, int]  # sign, t-exp, x-exp, y-exp, z-exp


def emit_polynomial(
    T: Triangulation, sigma: SignDistribution, lifting: dict
) -> list[Term]:
    d = T.degree
    if sigma.degree != d:
        raise ParseError(
            f"sign degree {sigma.degree} != triangulation degree {d}"
        )
    pts = lattice_points(d)
    missing = [p for p in pts if p not in lifting]
    if missing:
        raise ParseError(f"lifting undefined at {missing[0]}")
    return [
        (-1 if bit else 1, int(lifting[(i, j)]), i, j, d - i - j)
        for (i, j), bit in zip(pts, sigma.bits)
    ]


def _monomial(t_exp: int, x: int, y: int, z: int) -> str:
    parts = []
    for sym, e in (("t", t_exp), ("x", x), ("y", y), ("z", z)):
        if e == 1:
            parts.append(sym)
        elif e > 1:
            parts.append(f"{sym}^{e}")
    return "*".join(parts) if parts else "1"


def format_polynomial(terms: list[Term]) -> str:
    """Human-readable sum, highest x then y exponents first."""
    ordered = sorted(terms, key=lambda t: (-t[2], -t[3]))
    pieces = []
    for k, (sign, te, x, y, z) in enumerate(ordered):
        mono = _monomial(te, x, y, z)
        if k == 0:
            pieces.append(mono if sign > 0 else f"-{mono}")
        else:
            pieces.append(f"+ {mono}" if sign > 0 else f"- {mono}")
    return " ".join(pieces)

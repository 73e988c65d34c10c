"""Sign distributions on the lattice point set and their symmetry reductions.

A sign distribution assigns one bit per point of A(d), indexed by the
canonical lexicographic point order; bit 0 means "+" and bit 1 means "-".
The wire format is a string of '0'/'1' characters, leftmost character at
index 0.

Two reductions act on signs.  The eightfold action adds e0 + e1*i + e2*j
mod 2 for (e0, e1, e2) in {0,1}^3 and never changes the classified scheme;
its orbit representatives are the distributions with zero bits at (0,0),
(0,1) and (1,0).  The order-6 triangle symmetry permutes points together
with any triangulation it is applied to.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import IndexOutOfRange, ParseError
from .lattice import (
    SymmetryElement,
    Triangulation,
    lattice_points,
    map_triangulation,
    num_points,
    point_index,
)

# canonical indices of the three pinned points (0,0), (0,1), (1,0)
def _pinned_indices(d: int) -> tuple[int, int, int]:
    return (0, 1, d + 1)


@dataclass(frozen=True)
class SignDistribution:
    degree: int
    bits: tuple[int, ...]

    def __post_init__(self):
        n = num_points(self.degree)
        if len(self.bits) != n:
            raise ParseError(
                f"sign distribution for degree {self.degree} needs {n} bits, "
                f"got {len(self.bits)}"
            )
        if any(b not in (0, 1) for b in self.bits):
            raise ParseError("sign bits must be 0 or 1")

    def bitstring(self) -> str:
        return "".join(str(b) for b in self.bits)

    @classmethod
    def from_bitstring(cls, d: int, s: str) -> "SignDistribution":
        n = num_points(d)
        if len(s) != n:
            raise ParseError(
                f"degree {d} needs {n} sign bits, got {len(s)}", position=len(s)
            )
        bits = []
        for k, ch in enumerate(s):
            if ch not in "01":
                raise ParseError(f"invalid sign character {ch!r}", position=k)
            bits.append(int(ch))
        return cls(d, tuple(bits))


def num_representatives(d: int) -> int:
    """Size of the representative space, 2^(|A|-3)."""
    return 1 << (num_points(d) - 3)


def free_positions(d: int) -> list[int]:
    """Canonical indices that carry the bits of a representative index."""
    pinned = set(_pinned_indices(d))
    return [k for k in range(num_points(d)) if k not in pinned]


def representative(d: int, m: int) -> SignDistribution:
    """The m-th representative: pinned bits zero, the rest the digits of m.

    The least significant digit of m goes to the smallest free index.
    """
    if m < 0 or m >= num_representatives(d):
        raise IndexOutOfRange(
            f"representative index {m} outside [0, 2^{num_points(d) - 3})"
        )
    bits = [0] * num_points(d)
    for pos, k in enumerate(free_positions(d)):
        bits[k] = (m >> pos) & 1
    return SignDistribution(d, tuple(bits))


def eps_action(sigma: SignDistribution, eps: tuple[int, int, int]) -> SignDistribution:
    """Add e0 + e1*i + e2*j mod 2 to every bit."""
    d = sigma.degree
    pts = lattice_points(d)
    e0, e1, e2 = eps
    bits = tuple(
        (b + e0 + e1 * p[0] + e2 * p[1]) % 2 for b, p in zip(sigma.bits, pts)
    )
    return SignDistribution(d, bits)


def normalize_sign(sigma: SignDistribution) -> tuple[SignDistribution, int]:
    """The unique representative in sigma's eightfold orbit, plus its index."""
    d = sigma.degree
    i00, i01, i10 = _pinned_indices(d)
    e0 = sigma.bits[i00]
    e2 = (sigma.bits[i01] + e0) % 2
    e1 = (sigma.bits[i10] + e0) % 2
    rep = eps_action(sigma, (e0, e1, e2))
    m = 0
    for pos, k in enumerate(free_positions(d)):
        m |= rep.bits[k] << pos
    return rep, m


def raw_index(sigma: SignDistribution) -> int:
    """Index of sigma in the full 2^|A| space (bit k of the index = bit k)."""
    m = 0
    for pos, b in enumerate(sigma.bits):
        m |= b << pos
    return m


def sign_from_raw_index(d: int, m: int) -> SignDistribution:
    n = num_points(d)
    if m < 0 or m >= (1 << n):
        raise IndexOutOfRange(f"raw sign index {m} outside [0, 2^{n})")
    return SignDistribution(d, tuple((m >> k) & 1 for k in range(n)))


def map_signs(sigma: SignDistribution, g: SymmetryElement) -> SignDistribution:
    """Push signs forward along a triangle symmetry: new(g(p)) = old(p)."""
    d = sigma.degree
    idx = point_index(d)
    bits = [0] * num_points(d)
    for p, k in idx.items():
        bits[idx[g.apply(d, p)]] = sigma.bits[k]
    return SignDistribution(d, tuple(bits))


def apply_symmetry(
    T: Triangulation, sigma: SignDistribution | None, g: SymmetryElement
) -> tuple[Triangulation, SignDistribution | None]:
    """Apply one triangle symmetry to a triangulation and optional signs."""
    if sigma is not None and sigma.degree != T.degree:
        raise ParseError(
            f"sign distribution degree {sigma.degree} != triangulation degree {T.degree}"
        )
    newT = map_triangulation(T, g)
    news = None if sigma is None else map_signs(sigma, g)
    return newT, news

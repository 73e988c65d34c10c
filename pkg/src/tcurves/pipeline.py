"""Staged reference pipeline from signed diamond to real scheme.

This is the readable, pure-Python realization of the classification: strip
the crossed edges, union-find the same-sign components, coarsen into
projective-plane regions through the antipodal boundary pairing (tracking
an orientation parity per merge, since every identification reverses
orientation), detect the non-orientable root region, and read the real
scheme off the region adjacency tree.  The compiled kernel in
``kernels.py`` computes the same thing; differential tests hold the two
(and the piece-complex oracle) together.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .diamond import DiamondComplex, extend_signs, reflect
from .errors import InvariantViolation
from .lattice import Triangulation, harnack_bound
from .scheme import SchemeNode, SchemeTree, canonical_scheme
from .signs import SignDistribution


class UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))
        self.rank = [0] * n

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x: int, y: int) -> None:
        x, y = self.find(x), self.find(y)
        if x == y:
            return
        if self.rank[x] < self.rank[y]:
            x, y = y, x
        self.parent[y] = x
        if self.rank[x] == self.rank[y]:
            self.rank[x] += 1


class ParityUnionFind:
    """Union-find whose elements carry a parity relative to their root."""

    def __init__(self, n: int):
        self.parent = list(range(n))
        self.rank = [0] * n
        self.parity = [0] * n
        self.odd = [False] * n  # root flag: an odd cycle was closed here

    def find(self, x: int) -> tuple[int, int]:
        root, p = x, 0
        while self.parent[root] != root:
            p ^= self.parity[root]
            root = self.parent[root]
        v, acc = x, p
        while self.parent[v] != v:
            nxt, step = self.parent[v], self.parity[v]
            self.parent[v], self.parity[v] = root, acc
            acc ^= step
            v = nxt
        return root, p

    def union_constraint(self, x: int, y: int, delta: int) -> None:
        """Impose parity(x) xor parity(y) == delta."""
        rx, px = self.find(x)
        ry, py = self.find(y)
        if rx == ry:
            if (px ^ py) != delta:
                self.odd[rx] = True
            return
        if self.rank[rx] < self.rank[ry]:
            rx, ry, px, py = ry, rx, py, px
        self.parent[ry] = rx
        self.parity[ry] = px ^ py ^ delta
        self.odd[rx] = self.odd[rx] or self.odd[ry]
        if self.rank[rx] == self.rank[ry]:
            self.rank[rx] += 1


def crossed_mask(D: DiamondComplex, full_signs: np.ndarray) -> np.ndarray:
    """One bit per diamond edge: endpoints carry distinct signs."""
    out = np.zeros(len(D.edges), dtype=bool)
    for k, (u, v) in enumerate(D.edges):
        out[k] = full_signs[u] != full_signs[v]
    return out


def component_partition(D: DiamondComplex, full_signs: np.ndarray) -> list[int]:
    """Component id per vertex: connectivity through non-crossed edges.

    Ids are dense and assigned by first occurrence in vertex order.
    Lattice points that are not vertices of the reflected triangulation
    (possible only for non-unimodular input) get id -1.
    """
    uf = UnionFind(len(D.points))
    for (u, v) in D.edges:
        if full_signs[u] == full_signs[v]:
            uf.union(u, v)
    used = D.used_vertices()
    ids: dict[int, int] = {}
    comp = []
    for v in range(len(D.points)):
        if not used[v]:
            comp.append(-1)
            continue
        r = uf.find(v)
        if r not in ids:
            ids[r] = len(ids)
        comp.append(ids[r])
    return comp


def region_partition(
    D: DiamondComplex, component_of: list[int]
) -> tuple[list[int], int | None]:
    """Coarsen components into regions through the antipodal pairing.

    Every antipodal identification reverses orientation, so each pairing
    imposes a parity-1 constraint between the two components; a constraint
    closing a cycle of net parity 0 exposes an odd (orientation-reversing)
    cycle, and the region containing it is returned.  For even degree
    exactly one such region must exist; for odd degree the parity result
    is meaningless and reported as None.
    """
    ncomp = max(component_of) + 1
    uf = ParityUnionFind(ncomp)
    for (u, v) in D.antipodal_pairs:
        uf.union_constraint(component_of[u], component_of[v], 1)

    ids: dict[int, int] = {}
    region_of = []
    odd_regions = set()
    for c in range(ncomp):
        r, _ = uf.find(c)
        if r not in ids:
            ids[r] = len(ids)
            if uf.odd[r]:
                odd_regions.add(ids[r])
        region_of.append(ids[r])

    if D.degree % 2 == 0:
        if len(odd_regions) != 1:
            raise InvariantViolation(
                f"even degree expects exactly one odd-cycle region, "
                f"found {len(odd_regions)}"
            )
        return region_of, next(iter(odd_regions))
    return region_of, None


def detect_root(
    D: DiamondComplex,
    full_signs: np.ndarray,
    component_of: list[int],
    region_of: list[int],
    odd_cycle_region: int | None,
) -> int:
    """The root region: non-orientable for even d, pseudoline-carrying for odd."""
    if D.degree % 2 == 0:
        if odd_cycle_region is None:
            raise InvariantViolation("even degree without an odd-cycle region")
        return odd_cycle_region
    root = None
    for (u, v) in D.edges:
        if full_signs[u] == full_signs[v]:
            continue
        ru = region_of[component_of[u]]
        rv = region_of[component_of[v]]
        if ru == rv:
            if root is not None and root != ru:
                raise InvariantViolation(
                    f"conflicting pseudoline regions {root} and {ru}"
                )
            root = ru
    if root is None:
        raise InvariantViolation("odd degree but no pseudoline region found")
    return root


def region_tree(
    D: DiamondComplex,
    full_signs: np.ndarray,
    component_of: list[int],
    region_of: list[int],
    root: int,
) -> tuple[SchemeTree, set[tuple[int, int]]]:
    """Build the region adjacency tree rooted at the root region.

    Each crossed edge joining two distinct regions witnesses the oval
    separating them; deduplicated region pairs are the tree edges.
    """
    nreg = max(region_of) + 1
    even = D.degree % 2 == 0
    pairs: set[tuple[int, int]] = set()
    for (u, v) in D.edges:
        if full_signs[u] == full_signs[v]:
            continue
        ru = region_of[component_of[u]]
        rv = region_of[component_of[v]]
        if ru == rv:
            if even:
                raise InvariantViolation(
                    "even degree with a nonseparating curve component"
                )
            continue
        pairs.add((min(ru, rv), max(ru, rv)))

    if len(pairs) != nreg - 1:
        raise InvariantViolation(
            f"region graph is not a tree: {nreg} regions, {len(pairs)} edges"
        )
    nbrs: dict[int, list[int]] = {r: [] for r in range(nreg)}
    for a, b in pairs:
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
        raise InvariantViolation("region graph is disconnected")
    return SchemeTree(nodes[root], has_pseudoline=D.degree % 2 == 1), pairs


@dataclass(frozen=True)
class ClassificationResult:
    scheme: str
    oval_count: int
    region_count: int
    has_pseudoline: bool

    def to_dict(self) -> dict:
        return {
            "scheme": self.scheme,
            "oval_count": self.oval_count,
            "region_count": self.region_count,
            "has_pseudoline": self.has_pseudoline,
        }


@dataclass(frozen=True)
class PatchworkAnalysis:
    """All intermediate artifacts of one staged classification."""

    diamond: DiamondComplex
    full_signs: np.ndarray
    crossed: np.ndarray
    component_of: list[int]
    region_of: list[int]
    root_region: int
    region_edges: set[tuple[int, int]]
    has_pseudoline: bool
    result: ClassificationResult


def analyze(T: Triangulation, sigma: SignDistribution) -> PatchworkAnalysis:
    """Run the staged pipeline, keeping every intermediate artifact."""
    D = reflect(T)
    full = extend_signs(D, sigma)
    comp = component_partition(D, full)
    region_of, odd_region = region_partition(D, comp)
    root = detect_root(D, full, comp, region_of, odd_region)
    tree, pairs = region_tree(D, full, comp, region_of, root)
    result = _result_from_tree(T.degree, tree, max(region_of) + 1, len(pairs))
    return PatchworkAnalysis(
        D, full, crossed_mask(D, full), comp, region_of, root, pairs,
        T.degree % 2 == 1, result,
    )


def _result_from_tree(
    d: int, tree: SchemeTree, nreg: int, novals: int
) -> ClassificationResult:
    total = novals + (1 if d % 2 == 1 else 0)
    if total > harnack_bound(d):
        raise InvariantViolation(
            f"{total} curve components exceed the degree-{d} bound "
            f"{harnack_bound(d)}"
        )
    if nreg != novals + 1:
        raise InvariantViolation(
            f"{nreg} regions with {novals} ovals violates the tree count"
        )
    return ClassificationResult(
        scheme=canonical_scheme(tree),
        oval_count=novals,
        region_count=nreg,
        has_pseudoline=d % 2 == 1,
    )


def classify_reference(
    T: Triangulation, sigma: SignDistribution
) -> ClassificationResult:
    """Staged-pipeline classification (slow path; kept for inspection)."""
    return analyze(T, sigma).result

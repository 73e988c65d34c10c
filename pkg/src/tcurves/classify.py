"""Fast classification entry points backed by the compiled kernels.

A :class:`Classifier` precomputes the reflected incidence arrays for one
triangulation and owns reusable scratch sized by the degree, so repeated
calls allocate nothing.  Each scratch may be used by one task at a time;
sweeps hand every worker its own.
"""

from __future__ import annotations

import numpy as np

from . import kernels
from .diamond import reflect
from .errors import InvariantViolation, ParseError
from .lattice import Triangulation, harnack_bound, num_points, validate_triangulation
from .pipeline import ClassificationResult
from .signs import SignDistribution, free_positions


class Classifier:
    """Reusable classification state for one triangulation."""

    def __init__(self, T: Triangulation):
        self.triangulation = T
        d = T.degree
        self.degree = d
        D = reflect(T)
        self.diamond = D
        nv = len(D.points)
        npts = num_points(d)
        src, par = D.sign_extension_tables()
        used = D.used_vertices()
        edge_u = np.array([e[0] for e in D.edges], dtype=np.int32)
        edge_v = np.array([e[1] for e in D.edges], dtype=np.int32)
        ap_u = np.array([p[0] for p in D.antipodal_pairs], dtype=np.int32)
        ap_v = np.array([p[1] for p in D.antipodal_pairs], dtype=np.int32)
        self.maxreg = harnack_bound(d) + 2

        rep_pos = np.full(npts, -1, dtype=np.int64)
        for pos, k in enumerate(free_positions(d)):
            rep_pos[k] = pos
        raw_pos = np.arange(npts, dtype=np.int64)
        self._rep_bitpos = rep_pos
        self._raw_bitpos = raw_pos

        self._plan_common = (
            d, nv, npts, edge_u, edge_v, src, par, used, ap_u, ap_v, self.maxreg,
        )
        self._scratch = self.make_scratch()
        self._bits = np.zeros(npts, dtype=np.uint8)

    def plan(self, raw_space: bool = False):
        bitpos = self._raw_bitpos if raw_space else self._rep_bitpos
        return (*self._plan_common, bitpos)

    def make_scratch(self):
        nv = len(self.diamond.points)
        mr = self.maxreg
        cap = 64 + 16 * mr + 2 * mr * mr
        return (
            np.zeros(nv, dtype=np.uint8),      # sgn
            np.zeros(nv, dtype=np.int32),      # p1
            np.zeros(nv, dtype=np.int32),      # r1
            np.zeros(nv, dtype=np.int32),      # cmap
            np.zeros(nv, dtype=np.int32),      # comp
            np.zeros(nv, dtype=np.int32),      # p2
            np.zeros(nv, dtype=np.int32),      # r2
            np.zeros(nv, dtype=np.uint8),      # par2
            np.zeros(nv, dtype=np.uint8),      # odd2
            np.zeros(nv, dtype=np.int32),      # rmap
            np.zeros(nv, dtype=np.int32),      # regc
            np.zeros(mr, dtype=np.uint8),      # rodd
            np.zeros(mr * mr, dtype=np.int64),  # stamp
            np.zeros(1, dtype=np.int64),       # meta (stamp generation)
            np.zeros(mr, dtype=np.int32),      # rea
            np.zeros(mr, dtype=np.int32),      # reb
            np.zeros(mr, dtype=np.int32),      # degbuf
            np.zeros(mr + 1, dtype=np.int32),  # adjoff
            np.zeros(2 * mr, dtype=np.int32),  # adj
            np.zeros(mr, dtype=np.int32),      # parent
            np.zeros(mr, dtype=np.int32),      # order
            np.zeros(mr, dtype=np.int32),      # chead
            np.zeros(mr, dtype=np.int32),      # cnext
            np.zeros(mr, dtype=np.int64),      # noff
            np.zeros(mr, dtype=np.int64),      # nlen
            np.zeros(mr, dtype=np.int32),      # sortbuf
            np.zeros(cap, dtype=np.uint8),     # arena
            np.zeros(cap, dtype=np.uint8),     # out
        )

    def _run_bits(self, bits: np.ndarray) -> ClassificationResult:
        scr = self._scratch
        status, ovals, nreg, outlen = kernels.classify_bits_kernel(
            self.plan(), scr, bits
        )
        if status != kernels.OK:
            raise InvariantViolation(kernels.STATUS_MESSAGES[status])
        scheme = bytes(scr[27][:outlen]).decode("ascii")
        return ClassificationResult(
            scheme=scheme,
            oval_count=int(ovals),
            region_count=int(nreg),
            has_pseudoline=self.degree % 2 == 1,
        )

    def classify(self, sigma: SignDistribution | str) -> ClassificationResult:
        if isinstance(sigma, str):
            sigma = SignDistribution.from_bitstring(self.degree, sigma)
        if sigma.degree != self.degree:
            raise ParseError(
                f"sign degree {sigma.degree} != triangulation degree {self.degree}"
            )
        self._bits[:] = sigma.bits
        return self._run_bits(self._bits)


def classify(
    T: Triangulation,
    sigma: SignDistribution | str,
    validate: bool = True,
    classifier: Classifier | None = None,
) -> ClassificationResult:
    """Classify one patchwork; validation is skippable for pre-checked input."""
    if validate and classifier is None:
        T = validate_triangulation(T.degree, T.edges)
    c = classifier or Classifier(T)
    return c.classify(sigma)

"""Exhaustive sweeps and seeded sampling over sign distributions.

The default domain is the representative space of size 2^(|A|-3); a flag
widens to the raw 2^|A| space.  Work is split into contiguous chunks over a
thread pool (the kernels release the GIL); every worker owns one scratch
and one aggregation state, and partial results merge exactly (counts add,
witnesses take the minimum index), so reports are byte-identical for any
worker count and chunk size.  Sampling draws indices with a counter-based
generator keyed by (seed, draw number) and is therefore reproducible under
any partitioning.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from . import kernels
from .classify import Classifier
from .errors import (
    BudgetExceeded,
    IndexOutOfRange,
    InvariantViolation,
    MergeMismatch,
)
from .lattice import Triangulation, harnack_bound, num_points
from .signs import representative, sign_from_raw_index

DEFAULT_CHUNK = 1 << 16
_MAX_DOMAIN_BITS = 62  # indices ride in int64 throughout the kernels


@dataclass(frozen=True)
class SweepRange:
    start: int
    end: int

    def __post_init__(self):
        if not (0 <= self.start <= self.end):
            raise IndexOutOfRange(f"bad sweep range [{self.start}, {self.end})")


@dataclass
class SweepReport:
    """Mergeable aggregate of one enumeration run."""

    degree: int
    fingerprint: str
    raw_space: bool
    oval_histogram: tuple[int, ...]
    scheme_map: dict[str, tuple[int, int]]  # scheme -> (count, witness index)
    total_classified: int
    params: dict = field(default_factory=dict, compare=False)

    def witness_bitstring(self, scheme: str) -> str:
        m = self.scheme_map[scheme][1]
        if self.raw_space:
            return sign_from_raw_index(self.degree, m).bitstring()
        return representative(self.degree, m).bitstring()

    def distinct_schemes(self) -> int:
        return len(self.scheme_map)

    def max_ovals(self) -> int:
        return max(
            (k for k, c in enumerate(self.oval_histogram) if c), default=0
        )


def empty_report(T: Triangulation, raw_space: bool = False) -> SweepReport:
    return SweepReport(
        degree=T.degree,
        fingerprint=T.fingerprint(),
        raw_space=raw_space,
        oval_histogram=tuple([0] * (harnack_bound(T.degree) + 1)),
        scheme_map={},
        total_classified=0,
    )


def merge(a: SweepReport, b: SweepReport) -> SweepReport:
    """Combine two reports over the same input; associative and commutative."""
    if (a.degree, a.fingerprint, a.raw_space) != (b.degree, b.fingerprint, b.raw_space):
        raise MergeMismatch(
            "cannot merge reports over different triangulations or domains"
        )
    hist = tuple(x + y for x, y in zip(a.oval_histogram, b.oval_histogram))
    schemes = dict(a.scheme_map)
    for s, (c, w) in b.scheme_map.items():
        if s in schemes:
            c0, w0 = schemes[s]
            schemes[s] = (c0 + c, min(w0, w))
        else:
            schemes[s] = (c, w)
    return SweepReport(
        degree=a.degree,
        fingerprint=a.fingerprint,
        raw_space=a.raw_space,
        oval_histogram=hist,
        scheme_map=schemes,
        total_classified=a.total_classified + b.total_classified,
        params={**a.params, **b.params},
    )


def _domain_bits(d: int, raw_space: bool) -> int:
    bits = num_points(d) if raw_space else num_points(d) - 3
    if bits > _MAX_DOMAIN_BITS:
        raise BudgetExceeded(
            f"degree-{d} {'raw' if raw_space else 'representative'} space needs "
            f"{bits} index bits; at most {_MAX_DOMAIN_BITS} are supported"
        )
    return bits


def _make_agg(maxreg: int):
    cap = 1 << 16
    return (
        np.zeros(cap, dtype=np.uint8),   # hused
        np.zeros(cap, dtype=np.int64),   # hkey
        np.zeros(cap, dtype=np.int64),   # hoff
        np.zeros(cap, dtype=np.int64),   # hlen
        np.zeros(cap, dtype=np.int64),   # hcount
        np.zeros(cap, dtype=np.int64),   # hwit
        np.zeros(1 << 22, dtype=np.uint8),  # scheme byte arena
        np.zeros(maxreg + 1, dtype=np.int64),  # oval histogram
        np.zeros(3, dtype=np.int64),     # [arena used, total, distinct]
    )


def _collect(agg) -> tuple[dict[str, tuple[int, int]], np.ndarray, int]:
    hused, hkey, hoff, hlen, hcount, hwit, sarena, hist, ameta = agg
    schemes: dict[str, tuple[int, int]] = {}
    for slot in np.nonzero(hused)[0]:
        off, ln = int(hoff[slot]), int(hlen[slot])
        s = bytes(sarena[off:off + ln]).decode("ascii")
        schemes[s] = (int(hcount[slot]), int(hwit[slot]))
    return schemes, hist, int(ameta[1])


def _run_chunks(classifier, raw_space, chunks, workers, runner):
    """Drive kernel chunks across a thread pool with per-worker state."""
    plan = classifier.plan(raw_space)
    npts = num_points(classifier.degree)

    def work(assigned):
        scr = classifier.make_scratch()
        agg = _make_agg(classifier.maxreg)
        bits = np.zeros(npts, dtype=np.uint8)
        for lo, hi in assigned:
            status, bad = runner(plan, scr, agg, bits, lo, hi)
            if status != kernels.OK:
                raise InvariantViolation(
                    f"{kernels.STATUS_MESSAGES[status]} (at index {bad})"
                )
        return _collect(agg)

    groups = [chunks[w::workers] for w in range(workers)]
    groups = [g for g in groups if g]
    if len(groups) <= 1:
        results = [work(g) for g in groups]
    else:
        with ThreadPoolExecutor(max_workers=len(groups)) as pool:
            results = list(pool.map(work, groups))

    schemes: dict[str, tuple[int, int]] = {}
    hist = np.zeros(classifier.maxreg + 1, dtype=np.int64)
    total = 0
    for s_map, h, t in results:
        hist += h
        total += t
        for s, (c, w) in s_map.items():
            if s in schemes:
                c0, w0 = schemes[s]
                schemes[s] = (c0 + c, min(w0, w))
            else:
                schemes[s] = (c, w)
    return schemes, hist, total


def _finish(T, raw_space, schemes, hist, total, params) -> SweepReport:
    nbins = harnack_bound(T.degree) + 1
    if hist[nbins:].any():
        raise InvariantViolation("oval histogram mass beyond the degree bound")
    return SweepReport(
        degree=T.degree,
        fingerprint=T.fingerprint(),
        raw_space=raw_space,
        oval_histogram=tuple(int(x) for x in hist[:nbins]),
        scheme_map=schemes,
        total_classified=total,
        params=params,
    )


def sweep(
    T: Triangulation,
    sweep_range: SweepRange | None = None,
    workers: int = 1,
    raw_space: bool = False,
    chunk_size: int = DEFAULT_CHUNK,
    classifier: Classifier | None = None,
) -> SweepReport:
    """Classify every sign index in the range (default: the whole domain)."""
    bits = _domain_bits(T.degree, raw_space)
    domain = 1 << bits
    r = sweep_range or SweepRange(0, domain)
    if r.end > domain:
        raise IndexOutOfRange(
            f"sweep range end {r.end} exceeds domain size {domain}"
        )
    classifier = classifier or Classifier(T)
    chunks = [
        (lo, min(lo + chunk_size, r.end)) for lo in range(r.start, r.end, chunk_size)
    ]
    schemes, hist, total = _run_chunks(
        classifier, raw_space, chunks, max(1, workers), kernels.sweep_kernel
    )
    params = {
        "mode": "sweep",
        "start": r.start,
        "end": r.end,
        "raw_space": raw_space,
    }
    return _finish(T, raw_space, schemes, hist, total, params)


def sample(
    T: Triangulation,
    n: int,
    seed: int,
    workers: int = 1,
    chunk_size: int = DEFAULT_CHUNK,
    classifier: Classifier | None = None,
) -> SweepReport:
    """Classify n uniform draws from the representative space, reproducibly."""
    if n < 1:
        raise IndexOutOfRange(f"sample size must be positive, got {n}")
    nbits = _domain_bits(T.degree, raw_space=False)
    classifier = classifier or Classifier(T)
    chunks = [(lo, min(lo + chunk_size, n)) for lo in range(0, n, chunk_size)]

    def runner(plan, scr, agg, bits, lo, hi):
        return kernels.sample_kernel(plan, scr, agg, bits, seed, lo, hi, nbits)

    schemes, hist, total = _run_chunks(
        classifier, False, chunks, max(1, workers), runner
    )
    params = {"mode": "sample", "n": n, "seed": seed}
    return _finish(T, False, schemes, hist, total, params)

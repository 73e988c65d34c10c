"""Compiled classification kernels.

One fused routine runs the whole pipeline on preallocated integer arrays:
sign extension, union-find over non-crossed edges, parity-tracking
union-find over antipodal pairs, root detection, region-tree assembly and
canonical string rendering, all without allocating.  Sweep and sample
loops reuse the same scratch and aggregate oval histograms plus canonical
scheme counts in an open-addressing byte table.  Kernels release the GIL
so thread pools parallelize across chunks.

Status codes nonzero on violated invariants; the Python wrappers turn
them into exceptions.
"""

from __future__ import annotations

import numpy as np
from numba import njit

OK = 0
TOO_MANY_REGIONS = 1
NO_ODD_REGION = 2
MANY_ODD_REGIONS = 3
NO_PSEUDOLINE = 4
ROOT_CONFLICT = 5
NONSEPARATING_OVAL = 6
NOT_A_TREE = 7
DISCONNECTED = 8
ARENA_OVERFLOW = 9
TABLE_FULL = 10
HASH_COLLISION = 11

STATUS_MESSAGES = {
    TOO_MANY_REGIONS: "region count exceeds the degree bound",
    NO_ODD_REGION: "even degree expects exactly one odd-cycle region, found none",
    MANY_ODD_REGIONS: "even degree expects exactly one odd-cycle region, found several",
    NO_PSEUDOLINE: "odd degree but no pseudoline region found",
    ROOT_CONFLICT: "conflicting pseudoline regions",
    NONSEPARATING_OVAL: "even degree with a nonseparating curve component",
    NOT_A_TREE: "region graph is not a tree",
    DISCONNECTED: "region graph is disconnected",
    ARENA_OVERFLOW: "internal: canonical-string arena overflow",
    TABLE_FULL: "internal: scheme table full",
    HASH_COLLISION: "internal: 64-bit scheme hash collision",
}


@njit(cache=True, inline="always")
def _find1(parent, x):
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


@njit(cache=True, inline="always")
def _find2(parent, parity, x):
    root = x
    p = 0
    while parent[root] != root:
        p ^= parity[root]
        root = parent[root]
    v = x
    acc = p
    while parent[v] != v:
        nxt = parent[v]
        step = parity[v]
        parent[v] = root
        parity[v] = acc
        acc ^= step
        v = nxt
    return root, p


@njit(cache=True, inline="always")
def _cmp_slices(arena, o1, l1, o2, l2):
    n = l1 if l1 < l2 else l2
    for k in range(n):
        a = arena[o1 + k]
        b = arena[o2 + k]
        if a != b:
            return -1 if a < b else 1
    if l1 == l2:
        return 0
    return -1 if l1 < l2 else 1


@njit(cache=True, inline="always")
def _write_int(buf, pos, value):
    if value == 0:
        buf[pos] = 48
        return pos + 1
    start = pos
    v = value
    while v > 0:
        buf[pos] = 48 + v % 10
        v //= 10
        pos += 1
    i, j = start, pos - 1
    while i < j:
        buf[i], buf[j] = buf[j], buf[i]
        i += 1
        j -= 1
    return pos


@njit(cache=True)
def classify_core(plan, scr, bits):
    """Classify one sign-bit vector; returns (status, ovals, regions, out_len)."""
    (d, nv, npts, edge_u, edge_v, src, par, used, ap_u, ap_v, maxreg, _bitpos) = plan
    (
        sgn, p1, r1, cmap, comp, p2, r2, par2, odd2, rmap, regc, rodd,
        stamp, meta, rea, reb, degbuf, adjoff, adj, parent, order,
        chead, cnext, noff, nlen, sortbuf, arena, out,
    ) = scr

    ne = edge_u.shape[0]
    even = d % 2 == 0

    for v in range(nv):
        sgn[v] = bits[src[v]] ^ par[v]
        p1[v] = v
        r1[v] = 0

    for e in range(ne):
        u = edge_u[e]
        v = edge_v[e]
        if sgn[u] == sgn[v]:
            ru = _find1(p1, u)
            rv = _find1(p1, v)
            if ru != rv:
                if r1[ru] < r1[rv]:
                    ru, rv = rv, ru
                p1[rv] = ru
                if r1[ru] == r1[rv]:
                    r1[ru] += 1

    ncomp = 0
    for v in range(nv):
        cmap[v] = -1
    for v in range(nv):
        if not used[v]:
            comp[v] = -1
            continue
        rt = _find1(p1, v)
        if cmap[rt] < 0:
            cmap[rt] = ncomp
            ncomp += 1
        comp[v] = cmap[rt]

    for c in range(ncomp):
        p2[c] = c
        r2[c] = 0
        par2[c] = 0
        odd2[c] = 0

    for a in range(ap_u.shape[0]):
        cu = comp[ap_u[a]]
        cv = comp[ap_v[a]]
        ru, pu = _find2(p2, par2, cu)
        rv, pv = _find2(p2, par2, cv)
        if ru == rv:
            if pu == pv:
                odd2[ru] = 1
        else:
            if r2[ru] < r2[rv]:
                ru, rv = rv, ru
                pu, pv = pv, pu
            p2[rv] = ru
            par2[rv] = pu ^ pv ^ 1
            if odd2[rv]:
                odd2[ru] = 1
            if r2[ru] == r2[rv]:
                r2[ru] += 1

    nreg = 0
    for c in range(ncomp):
        rmap[c] = -1
    for c in range(ncomp):
        rt, _ = _find2(p2, par2, c)
        if rmap[rt] < 0:
            if nreg >= maxreg:
                return TOO_MANY_REGIONS, -1, -1, 0
            rmap[rt] = nreg
            rodd[nreg] = odd2[rt]
            nreg += 1
        regc[c] = rmap[rt]

    root = -1
    if even:
        for r in range(nreg):
            if rodd[r]:
                if root >= 0:
                    return MANY_ODD_REGIONS, -1, -1, 0
                root = r
        if root < 0:
            return NO_ODD_REGION, -1, -1, 0

    gen = meta[0] + 1
    meta[0] = gen
    nedges = 0
    for e in range(ne):
        u = edge_u[e]
        v = edge_v[e]
        if sgn[u] == sgn[v]:
            continue
        a = regc[comp[u]]
        b = regc[comp[v]]
        if a == b:
            if even:
                return NONSEPARATING_OVAL, -1, -1, 0
            if root < 0:
                root = a
            elif root != a:
                return ROOT_CONFLICT, -1, -1, 0
            continue
        if a > b:
            a, b = b, a
        cell = a * maxreg + b
        if stamp[cell] != gen:
            stamp[cell] = gen
            if nedges >= nreg - 1:
                return NOT_A_TREE, -1, -1, 0
            rea[nedges] = a
            reb[nedges] = b
            nedges += 1
    if not even and root < 0:
        return NO_PSEUDOLINE, -1, -1, 0
    if nedges != nreg - 1:
        return NOT_A_TREE, -1, -1, 0

    # adjacency in CSR form, then a rooted breadth-first order
    for r in range(nreg):
        degbuf[r] = 0
    for k in range(nedges):
        degbuf[rea[k]] += 1
        degbuf[reb[k]] += 1
    adjoff[0] = 0
    for r in range(nreg):
        adjoff[r + 1] = adjoff[r] + degbuf[r]
        degbuf[r] = 0
    for k in range(nedges):
        a = rea[k]
        b = reb[k]
        adj[adjoff[a] + degbuf[a]] = b
        degbuf[a] += 1
        adj[adjoff[b] + degbuf[b]] = a
        degbuf[b] += 1

    for r in range(nreg):
        parent[r] = -1
        chead[r] = -1
    order[0] = root
    parent[root] = root
    head, tail = 0, 1
    while head < tail:
        r = order[head]
        head += 1
        for k in range(adjoff[r], adjoff[r + 1]):
            s = adj[k]
            if parent[s] < 0:
                parent[s] = r
                order[tail] = s
                tail += 1
    if tail != nreg:
        return DISCONNECTED, -1, -1, 0
    for k in range(nreg - 1, 0, -1):
        v = order[k]
        cnext[v] = chead[parent[v]]
        chead[parent[v]] = v

    # bottom-up canonical rendering: children before parents
    arena_cap = arena.shape[0]
    used = 0
    for k in range(nreg - 1, -1, -1):
        v = order[k]
        nleaf = 0
        h = 0
        total_child = 0
        c = chead[v]
        while c >= 0:
            if nlen[c] == 0:
                nleaf += 1
            else:
                sortbuf[h] = c
                h += 1
                total_child += nlen[c]
            c = cnext[c]
        if used + total_child + 16 * (h + 1) + 16 > arena_cap:
            return ARENA_OVERFLOW, -1, -1, 0
        for i in range(1, h):
            key = sortbuf[i]
            j = i - 1
            while j >= 0 and _cmp_slices(
                arena, noff[sortbuf[j]], nlen[sortbuf[j]], noff[key], nlen[key]
            ) > 0:
                sortbuf[j + 1] = sortbuf[j]
                j -= 1
            sortbuf[j + 1] = key
        pos = used
        first = True
        if nleaf > 0:
            used = _write_int(arena, used, nleaf)
            first = False
        i = 0
        while i < h:
            j = i
            while j < h and _cmp_slices(
                arena, noff[sortbuf[i]], nlen[sortbuf[i]],
                noff[sortbuf[j]], nlen[sortbuf[j]],
            ) == 0:
                j += 1
            if not first:
                arena[used] = 32
                arena[used + 1] = 117
                arena[used + 2] = 32
                used += 3
            first = False
            used = _write_int(arena, used, j - i)
            arena[used] = 60
            used += 1
            off = noff[sortbuf[i]]
            ln = nlen[sortbuf[i]]
            for q in range(ln):
                arena[used + q] = arena[off + q]
            used += ln
            arena[used] = 62
            used += 1
            i = j
        noff[v] = pos
        nlen[v] = used - pos

    items_off = noff[root]
    items_len = nlen[root]
    if items_len + 8 > out.shape[0]:
        return ARENA_OVERFLOW, -1, -1, 0
    w = 0
    out[w] = 60
    w += 1
    if not even:
        out[w] = 74
        w += 1
        if items_len > 0:
            out[w] = 32
            out[w + 1] = 117
            out[w + 2] = 32
            w += 3
    elif items_len == 0:
        out[w] = 48
        w += 1
    for q in range(items_len):
        out[w + q] = arena[items_off + q]
    w += items_len
    out[w] = 62
    w += 1
    return OK, nedges, nreg, w


@njit(cache=True, inline="always")
def _expand_bits(bitpos, npts, m, bits):
    for k in range(npts):
        pos = bitpos[k]
        bits[k] = 0 if pos < 0 else (m >> pos) & 1


@njit(cache=True, nogil=True)
def classify_bits_kernel(plan, scr, bits):
    return classify_core(plan, scr, bits)


@njit(cache=True, inline="always")
def _fnv1a(out, length):
    h = np.uint64(0xCBF29CE484222325)
    for k in range(length):
        h = (h ^ np.uint64(out[k])) * np.uint64(0x100000001B3)
    return np.int64(h & np.uint64(0x7FFFFFFFFFFFFFFF))


@njit(cache=True, inline="always")
def _aggregate(agg, out, outlen, ovals, m):
    (hused, hkey, hoff, hlen, hcount, hwit, sarena, hist, ameta) = agg
    hist[ovals] += 1
    ameta[1] += 1
    cap = hused.shape[0]
    mask = cap - 1
    h = _fnv1a(out, outlen)
    slot = h & mask
    while True:
        if hused[slot] == 0:
            if ameta[2] * 2 >= cap:
                return TABLE_FULL
            need = ameta[0] + outlen
            if need > sarena.shape[0]:
                return TABLE_FULL
            hused[slot] = 1
            hkey[slot] = h
            hoff[slot] = ameta[0]
            hlen[slot] = outlen
            hcount[slot] = 1
            hwit[slot] = m
            for k in range(outlen):
                sarena[ameta[0] + k] = out[k]
            ameta[0] += outlen
            ameta[2] += 1
            return OK
        if hkey[slot] == h:
            if hlen[slot] == outlen:
                same = True
                off = hoff[slot]
                for k in range(outlen):
                    if sarena[off + k] != out[k]:
                        same = False
                        break
                if same:
                    hcount[slot] += 1
                    if m < hwit[slot]:
                        hwit[slot] = m
                    return OK
            return HASH_COLLISION
        slot = (slot + 1) & mask


@njit(cache=True, nogil=True)
def sweep_kernel(plan, scr, agg, bits, start, end):
    """Classify every index in [start, end); returns (status, offending index)."""
    npts = plan[2]
    bitpos = plan[11]
    for m in range(start, end):
        _expand_bits(bitpos, npts, m, bits)
        status, ovals, nreg, outlen = classify_core(plan, scr, bits)
        if status != OK:
            return status, m
        status = _aggregate(agg, scr[27], outlen, ovals, m)
        if status != OK:
            return status, m
    return OK, -1


@njit(cache=True, inline="always")
def _splitmix64(seed, k):
    z = np.uint64(seed) + (np.uint64(k) + np.uint64(1)) * np.uint64(0x9E3779B97F4A7C15)
    z = (z ^ (z >> np.uint64(30))) * np.uint64(0xBF58476D1CE4E5B9)
    z = (z ^ (z >> np.uint64(27))) * np.uint64(0x94D049BB133111EB)
    return z ^ (z >> np.uint64(31))


@njit(cache=True, nogil=True)
def sample_kernel(plan, scr, agg, bits, seed, k0, k1, nbits):
    """Classify draws k0..k1-1 of the counter-based uniform sampler."""
    npts = plan[2]
    bitpos = plan[11]
    mask = np.uint64((1 << nbits) - 1)
    for k in range(k0, k1):
        m = np.int64(_splitmix64(seed, k) & mask)
        _expand_bits(bitpos, npts, m, bits)
        status, ovals, nreg, outlen = classify_core(plan, scr, bits)
        if status != OK:
            return status, m
        status = _aggregate(agg, scr[27], outlen, ovals, m)
        if status != OK:
            return status, m
    return OK, -1

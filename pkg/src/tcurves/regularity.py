"""Exact regularity certification via rational linear programming.

A triangulation is regular when some lifting makes every interior-edge fold
strictly convex.  Strictness cannot be certified in floating point, so the
feasibility problem is solved with an exact Fraction simplex: maximize a
common slack s subject to fold(edge) >= s for all interior edges and
s <= 1.  The triangulation is regular iff the optimum is positive (the
lifting scale is free, so any positive slack can be stretched to 1).
"""

from __future__ import annotations

from fractions import Fraction

from .lattice import Triangulation, orient2d, point_index


def _fold_coefficients(a, b, c, q):
    """Integer coefficients of the fold determinant at edge {a, b}.

    The determinant is linear in the four lifting values; it is positive
    exactly when lifted q lies strictly above the plane of lifted (a, b, c),
    with (a, b, c) counterclockwise.
    """
    if orient2d(a, b, c) < 0:
        b, c = c, b
    A = (c[0] - a[0]) * (q[1] - a[1]) - (c[1] - a[1]) * (q[0] - a[0])
    B = (b[0] - a[0]) * (q[1] - a[1]) - (b[1] - a[1]) * (q[0] - a[0])
    C = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])
    return {b: A, c: -B, q: C, a: -A + B - C}


def _simplex_max(c_obj, rows, rhs):
    """Maximize c_obj . x subject to rows . x <= rhs, x >= 0, exactly.

    Dense tableau simplex with Bland's rule; rhs entries are nonnegative so
    the slack basis is feasible.  Returns the optimal objective value.
    """
    m, n = len(rows), len(c_obj)
    T = [[Fraction(v) for v in row] + [Fraction(0)] * m + [Fraction(rhs[i])] for i, row in enumerate(rows)]
    for i in range(m):
        T[i][n + i] = Fraction(1)
    z = [Fraction(-v) for v in c_obj] + [Fraction(0)] * (m + 1)
    basis = list(range(n, n + m))

    while True:
        enter = next((j for j in range(n + m) if z[j] < 0), None)
        if enter is None:
            return z[-1]
        leave, best = None, None
        for i in range(m):
            if T[i][enter] > 0:
                ratio = T[i][-1] / T[i][enter]
                if best is None or ratio < best or (
                    ratio == best and basis[i] < basis[leave]
                ):
                    best, leave = ratio, i
        if leave is None:
            raise ArithmeticError("unbounded regularity program")
        piv = T[leave][enter]
        T[leave] = [v / piv for v in T[leave]]
        for i in range(m):
            if i != leave and T[i][enter]:
                f = T[i][enter]
                T[i] = [v - f * w for v, w in zip(T[i], T[leave])]
        if z[enter]:
            f = z[enter]
            z = [v - f * w for v, w in zip(z, T[leave])]
        basis[leave] = enter


def is_regular(T: Triangulation) -> bool:
    """Whether some lifting projects to T from its lower hull."""
    d = T.degree
    idx = point_index(d)
    corners = {idx[(0, 0)], idx[(d, 0)], idx[(0, d)]}
    # lifting is free modulo affine functions: pin the corners to zero
    cols: dict[int, int] = {}
    for k in range(len(idx)):
        if k not in corners:
            cols[k] = len(cols)
    nfree = len(cols)

    interior = T.interior_edges()
    if not interior:
        return True
    nvar = 2 * nfree + 1  # u - v split of free heights, plus the slack s
    rows, rhs = [], []
    for (a, b), (c, q) in sorted(interior.items()):
        coef = _fold_coefficients(a, b, c, q)
        row = [0] * nvar
        for p, cf in coef.items():
            k = idx[p]
            if k in corners:
                continue
            j = cols[k]
            row[j] -= cf
            row[nfree + j] += cf
        row[-1] = 1
        rows.append(row)
        rhs.append(0)
    cap = [0] * nvar
    cap[-1] = 1
    rows.append(cap)
    rhs.append(1)

    obj = [0] * nvar
    obj[-1] = 1
    return _simplex_max(obj, rows, rhs) > 0

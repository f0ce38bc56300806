"""Exact integer linear algebra: determinants, Hermite and Smith normal forms.

Everything runs on arbitrary-precision Python ints. A matrix is a sequence of
equal-length integer rows; results are fresh lists of lists and inputs are
never mutated. Only square matrices are handled, which is all the rest of the
package needs.
"""

from .errors import SingularMatrix

__all__ = ["det", "hnf", "snf"]


def _checked_copy(m):
    rows = [list(r) for r in m]
    n = len(rows)
    if n == 0 or any(len(r) != n for r in rows):
        raise ValueError("matrix must be square and non-empty")
    for r in rows:
        for x in r:
            if not isinstance(x, int):
                raise ValueError("matrix entries must be ints")
    return rows, n


def _identity(n):
    return [[int(i == j) for j in range(n)] for i in range(n)]


def det(m):
    """Exact determinant by fraction-free (Bareiss) elimination."""
    a, n = _checked_copy(m)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                # exact division: standard Bareiss identity
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def hnf(m):
    """Lower-triangular Hermite normal form with its row transform.

    Returns (h, u) where h = u @ m, u is unimodular, h is lower triangular
    with positive diagonal, and each below-diagonal entry lies in
    [0, diagonal of its column). Raises SingularMatrix if m is singular.
    """
    h, n = _checked_copy(m)
    u = _identity(n)

    def submul(dst, src, q):
        if q == 0:
            return
        hd, hs = h[dst], h[src]
        ud, us = u[dst], u[src]
        for t in range(n):
            hd[t] -= q * hs[t]
            ud[t] -= q * us[t]

    def swap(i, j):
        if i != j:
            h[i], h[j] = h[j], h[i]
            u[i], u[j] = u[j], u[i]

    # Columns right to left: concentrate the gcd of column j (over rows
    # 0..j, the rows still in play) at row j, zeroing the rows above it.
    for j in range(n - 1, -1, -1):
        while True:
            piv = -1
            for i in range(j + 1):
                x = h[i][j]
                if x != 0 and (piv < 0 or abs(x) < abs(h[piv][j])):
                    piv = i
            if piv < 0:
                raise SingularMatrix("matrix is singular")
            swap(piv, j)
            clean = True
            for i in range(j):
                if h[i][j] != 0:
                    submul(i, j, h[i][j] // h[j][j])
                    if h[i][j] != 0:
                        clean = False
            if clean:
                break
        if h[j][j] < 0:
            h[j] = [-x for x in h[j]]
            u[j] = [-x for x in u[j]]

    # Reduce below-diagonal entries; row j has no entries past column j, so
    # working columns in descending order never disturbs finished ones.
    for i in range(1, n):
        for j in range(i - 1, -1, -1):
            submul(i, j, h[i][j] // h[j][j])
    return h, u


def snf(m):
    """Smith normal form with both transforms.

    Returns (s, u, v) where s = u @ m @ v is diagonal with positive entries,
    each dividing the next, and u, v are unimodular. Raises SingularMatrix
    if m is singular. Pivots are chosen with minimal absolute value to keep
    intermediate entries small.
    """
    s, n = _checked_copy(m)
    u = _identity(n)
    v = _identity(n)

    def row_submul(dst, src, q):
        sd, ss = s[dst], s[src]
        ud, us = u[dst], u[src]
        for t in range(n):
            sd[t] -= q * ss[t]
            ud[t] -= q * us[t]

    def col_submul(dst, src, q):
        for r in s:
            r[dst] -= q * r[src]
        for r in v:
            r[dst] -= q * r[src]

    for t in range(n):
        while True:
            pi = pj = -1
            for i in range(t, n):
                for j in range(t, n):
                    x = s[i][j]
                    if x != 0 and (pi < 0 or abs(x) < abs(s[pi][pj])):
                        pi, pj = i, j
            if pi < 0:
                raise SingularMatrix("matrix is singular")
            if pi != t:
                s[pi], s[t] = s[t], s[pi]
                u[pi], u[t] = u[t], u[pi]
            if pj != t:
                for r in s:
                    r[pj], r[t] = r[t], r[pj]
                for r in v:
                    r[pj], r[t] = r[t], r[pj]
            dirty = False
            for i in range(t + 1, n):
                if s[i][t] != 0:
                    row_submul(i, t, s[i][t] // s[t][t])
                    if s[i][t] != 0:
                        dirty = True
            for j in range(t + 1, n):
                if s[t][j] != 0:
                    col_submul(j, t, s[t][j] // s[t][t])
                    if s[t][j] != 0:
                        dirty = True
            if dirty:
                continue
            # the pivot must divide the rest of the block; if not, fold the
            # offending row into row t and keep reducing
            p = s[t][t]
            offender = -1
            for i in range(t + 1, n):
                if any(x % p != 0 for x in s[i][t + 1:]):
                    offender = i
                    break
            if offender < 0:
                break
            row_submul(t, offender, -1)
        if s[t][t] < 0:
            s[t] = [-x for x in s[t]]
            u[t] = [-x for x in u[t]]
    return s, u, v

# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled kernels over exact scalar objects.

Entries stay Python objects (Fraction / GaussianRational); the gain comes from
typed index loops and skipping zero entries without interpreter overhead.
Semantics are identical to ``_kernels_py``.
"""

from fractions import Fraction

cdef object ZERO = Fraction(0)


def contract2(c, x, y, Py_ssize_t nout):
    cdef list out = [ZERO] * nout
    cdef Py_ssize_t i, j, k, nx = len(x), ny = len(y)
    cdef object xi, yj, w, v, ci, cij
    for i in range(nx):
        xi = x[i]
        if not xi:
            continue
        ci = c[i]
        for j in range(ny):
            yj = y[j]
            if not yj:
                continue
            w = xi * yj
            cij = ci[j]
            for k in range(nout):
                v = cij[k]
                if v:
                    out[k] = out[k] + w * v
    return out


def matvec(a, x):
    cdef list out = []
    cdef Py_ssize_t j, n = len(x)
    cdef object s, r, xj, row
    for row in a:
        s = ZERO
        for j in range(n):
            r = row[j]
            xj = x[j]
            if r and xj:
                s = s + r * xj
        out.append(s)
    return out


def matmul(a, b):
    if not a:
        return []
    cdef Py_ssize_t ncols = len(b[0]) if b else 0
    cdef Py_ssize_t t, j, inner
    cdef list out = []
    cdef list acc
    cdef object r, v, brow, row
    for row in a:
        acc = [ZERO] * ncols
        inner = len(row)
        for t in range(inner):
            r = row[t]
            if not r:
                continue
            brow = b[t]
            for j in range(ncols):
                v = brow[j]
                if v:
                    acc[j] = acc[j] + r * v
        out.append(acc)
    return out


def row_reduce(list rows, Py_ssize_t ncols):
    cdef list pivots = []
    cdef Py_ssize_t nrows = len(rows)
    cdef Py_ssize_t r = 0, col, t, j, piv
    cdef list prow, trow
    cdef object inv, f, pj
    for col in range(ncols):
        if r >= nrows:
            break
        piv = -1
        for t in range(r, nrows):
            if rows[t][col]:
                piv = t
                break
        if piv < 0:
            continue
        if piv != r:
            rows[r], rows[piv] = rows[piv], rows[r]
        prow = rows[r]
        inv = 1 / prow[col]
        for j in range(col, ncols):
            if prow[j]:
                prow[j] = prow[j] * inv
        for t in range(nrows):
            if t == r:
                continue
            trow = rows[t]
            f = trow[col]
            if not f:
                continue
            for j in range(col, ncols):
                pj = prow[j]
                if pj:
                    trow[j] = trow[j] - f * pj
        pivots.append(col)
        r += 1
    return pivots

"""Pure-Python kernels.  Must stay semantically identical to ``_kernels.pyx``."""

from fractions import Fraction

ZERO = Fraction(0)


def contract2(c, x, y, nout):
    """Return ``out[k] = sum_ij x[i] * y[j] * c[i][j][k]`` as a list."""
    out = [ZERO] * nout
    for i, xi in enumerate(x):
        if not xi:
            continue
        ci = c[i]
        for j, yj in enumerate(y):
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
    out = []
    for row in a:
        s = ZERO
        for r, xj in zip(row, x):
            if r and xj:
                s = s + r * xj
        out.append(s)
    return out


def matmul(a, b):
    if not a:
        return []
    ncols = len(b[0]) if b else 0
    out = []
    for row in a:
        acc = [ZERO] * ncols
        for t, r in enumerate(row):
            if not r:
                continue
            brow = b[t]
            for j in range(ncols):
                v = brow[j]
                if v:
                    acc[j] = acc[j] + r * v
        out.append(acc)
    return out


def row_reduce(rows, ncols):
    """Bring ``rows`` (list of lists, modified in place) to reduced row echelon form.

    Returns the list of pivot columns.
    """
    pivots = []
    nrows = len(rows)
    r = 0
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

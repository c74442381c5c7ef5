"""Dense exact linear algebra over the rationals (pure-Python backend).

Matrices are lists of row lists holding exact rational scalars (gmpy2 mpq
or Fraction).  Everything is plain Gauss-Jordan elimination with exact
division; no pivgrowth heuristics are needed because all arithmetic is
exact.  A Cython twin of this module provides the same four entry points
with faster index bookkeeping.
"""

from qcap.scalars import QQ

BACKEND = "python"


def _copy(mat):
    return [row[:] for row in mat]


def rref(mat):
    """Reduced row echelon form.  Returns (new matrix, pivot column list)."""
    m = _copy(mat)
    nrows = len(m)
    ncols = len(m[0]) if nrows else 0
    pivots = []
    r = 0
    for c in range(ncols):
        p = -1
        for i in range(r, nrows):
            if m[i][c]:
                p = i
                break
        if p < 0:
            continue
        m[r], m[p] = m[p], m[r]
        inv_piv = QQ(1) / m[r][c]
        m[r] = [x * inv_piv for x in m[r]]
        for i in range(nrows):
            if i != r and m[i][c]:
                f = m[i][c]
                row_r = m[r]
                row_i = m[i]
                for j in range(c, ncols):
                    row_i[j] = row_i[j] - f * row_r[j]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return m, pivots


def rank(mat):
    if not mat:
        return 0
    return len(rref(mat)[1])


def solve(mat, rhs):
    """One exact solution of mat @ x = rhs, or None if inconsistent."""
    nrows = len(mat)
    ncols = len(mat[0]) if nrows else 0
    aug = [mat[i][:] + [rhs[i]] for i in range(nrows)]
    red, pivots = rref(aug)
    if ncols in pivots:
        return None
    zero = 0 * rhs[0] if nrows else 0
    x = [zero] * ncols
    for r, c in enumerate(pivots):
        x[c] = red[r][ncols]
    return x


def inv(mat):
    """Exact inverse of a square matrix.  Raises ValueError if singular."""
    n = len(mat)
    aug = [mat[i][:] + [1 if i == j else 0 for j in range(n)] for i in range(n)]
    red, pivots = rref(aug)
    if pivots != list(range(n)):
        raise ValueError("matrix is singular")
    return [row[n:] for row in red]


def nullspace(mat):
    """Basis of the right kernel, one vector per free column."""
    nrows = len(mat)
    ncols = len(mat[0]) if nrows else 0
    red, pivots = rref(mat)
    pivset = set(pivots)
    free = [c for c in range(ncols) if c not in pivset]
    basis = []
    for fc in free:
        v = [0] * ncols
        v[fc] = 1
        for r, pc in enumerate(pivots):
            v[pc] = -red[r][fc]
        basis.append(v)
    return basis

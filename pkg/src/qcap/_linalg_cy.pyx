# cython: language_level=3, boundscheck=False, wraparound=False
"""Dense exact linear algebra over the rationals (compiled backend).

Same contracts as _linalg_py; entries stay Python rational objects, the
speedup comes from compiled loop and index bookkeeping.
"""

from qcap.scalars import QQ

BACKEND = "cython"


cdef list _copy(mat):
    return [list(row) for row in mat]


def rref(mat):
    """Reduced row echelon form.  Returns (new matrix, pivot column list)."""
    cdef list m = _copy(mat)
    cdef Py_ssize_t nrows = len(m)
    cdef Py_ssize_t ncols = len(m[0]) if nrows else 0
    cdef list pivots = []
    cdef Py_ssize_t r = 0, c, i, j, p
    cdef list row_r, row_i
    for c in range(ncols):
        p = -1
        for i in range(r, nrows):
            if (<list>m[i])[c]:
                p = i
                break
        if p < 0:
            continue
        m[r], m[p] = m[p], m[r]
        row_r = <list>m[r]
        inv_piv = QQ(1) / row_r[c]
        for j in range(ncols):
            row_r[j] = row_r[j] * inv_piv
        for i in range(nrows):
            if i == r:
                continue
            row_i = <list>m[i]
            f = row_i[c]
            if f:
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
    cdef Py_ssize_t nrows = len(mat)
    cdef Py_ssize_t ncols = len(mat[0]) if nrows else 0
    cdef Py_ssize_t i, r
    cdef list aug = [list(mat[i]) + [rhs[i]] for i in range(nrows)]
    red, pivots = rref(aug)
    if ncols in pivots:
        return None
    zero = 0 * rhs[0] if nrows else 0
    cdef list x = [zero] * ncols
    for r in range(len(pivots)):
        x[<Py_ssize_t>pivots[r]] = (<list>red[r])[ncols]
    return x


def inv(mat):
    """Exact inverse of a square matrix.  Raises ValueError if singular."""
    cdef Py_ssize_t n = len(mat)
    cdef Py_ssize_t i, j
    cdef list aug = []
    for i in range(n):
        row = list(mat[i])
        for j in range(n):
            row.append(1 if i == j else 0)
        aug.append(row)
    red, pivots = rref(aug)
    if pivots != list(range(n)):
        raise ValueError("matrix is singular")
    return [(<list>row)[n:] for row in red]


def nullspace(mat):
    """Basis of the right kernel, one vector per free column."""
    cdef Py_ssize_t nrows = len(mat)
    cdef Py_ssize_t ncols = len(mat[0]) if nrows else 0
    cdef Py_ssize_t fc, r
    red, pivots = rref(mat)
    pivset = set(pivots)
    cdef list basis = []
    for fc in range(ncols):
        if fc in pivset:
            continue
        v = [0] * ncols
        v[fc] = 1
        for r in range(len(pivots)):
            v[<Py_ssize_t>pivots[r]] = -(<list>red[r])[fc]
        basis.append(v)
    return basis
